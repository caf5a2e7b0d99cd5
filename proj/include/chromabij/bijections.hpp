#pragma once

#include <string>
#include <vector>

#include "chromabij/coloring.hpp"
#include "chromabij/graph.hpp"

namespace chromabij {

/// Intermediate state of the edge-by-edge bijection between acyclic
/// orientations (stage 0) and NBC spanning subgraphs (stage m): an acyclic
/// mixed graph whose edges form an NBC subset of the first `stage` edges of
/// the underlying graph, while its arcs orient exactly the rest.
struct StagedMixed {
  const Graph* graph = nullptr;
  int stage = 0;
  MixedGraph mixed;

  friend bool operator==(const StagedMixed& a, const StagedMixed& b) {
    return a.graph == b.graph && a.stage == b.stage && a.mixed == b.mixed;
  }
};

/// Stage-0 state from an acyclic orientation; throws precondition_error if
/// the orientation has a directed cycle.
StagedMixed stage_from_orientation(const Graph& g, const Orientation& o);

/// Stage-m state from an NBC subset; throws precondition_error otherwise.
StagedMixed stage_from_subset(const Graph& g, const EdgeSubset& s);

/// Checks every StagedMixed invariant, throwing precondition_error on the
/// first violation.
void validate_stage(const StagedMixed& s);

/// What happened to the edge processed by one bijection step.
struct StepInfo {
  int edge_index = -1;        ///< 0-based index of the edge handled
  std::string action;         ///< unoriented | removed | oriented-normal | oriented-abnormal
  std::string violated_rule;  ///< "", "A", "B", "A'", "B'"
};

/// Stage i-1 -> stage i: the arc over edge e_i is unoriented when (A) it is
/// the normal (low -> high) orientation and (B) unorienting keeps the mixed
/// graph acyclic; otherwise it is removed. `i` is 1-based and must equal
/// s.stage + 1.
StagedMixed forward_step(const StagedMixed& s, int i, StepInfo* info = nullptr);

/// Stage i -> stage i-1, inverse of forward_step: edge e_i is oriented
/// abnormally when (A') it is absent from the mixed graph and (B') adding
/// the abnormal arc keeps acyclicity; otherwise normally (dropping the edge
/// if present).
StagedMixed backward_step(const StagedMixed& s, int i, StepInfo* info = nullptr);

/// The full composition: acyclic orientation -> NBC spanning subgraph.
EdgeSubset orientation_to_nbc(const Graph& g, const Orientation& o);

/// Inverse composition: NBC spanning subgraph -> acyclic orientation.
Orientation nbc_to_orientation(const Graph& g, const EdgeSubset& s);

/// One recorded stage of a traced bijection run.
struct TraceEntry {
  StagedMixed state;
  StepInfo info;  ///< info.edge_index == -1 for the initial state
};

std::vector<TraceEntry> trace_orientation_to_nbc(const Graph& g, const Orientation& o);
std::vector<TraceEntry> trace_nbc_to_orientation(const Graph& g, const EdgeSubset& s);

/// Color-classwise bijection: restricted to each color class of k, the
/// monochromatic-edge subgraph keeps its induced edge order and the inner
/// bijection is applied there; the union over classes is an NBC subset on
/// which k is monochromatic by components. Requires o acyclic and
/// compatible with k.
EdgeSubset compatible_to_nbc(const Graph& g, const Coloring& k, const Orientation& o);

/// Inverse of compatible_to_nbc: arcs between different color classes point
/// toward the larger color, and each class's subset is sent back through
/// the inner inverse. Requires s NBC with k monochromatic on its
/// components; the result is acyclic and compatible with k.
Orientation nbc_to_compatible(const Graph& g, const Coloring& k, const EdgeSubset& s);

}  // namespace chromabij
