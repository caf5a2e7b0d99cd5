#include "chromabij/bijections.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "chromabij/errors.hpp"

namespace chromabij {

namespace {

MixedGraph with_edges_arcs(int n, const std::set<Edge>& edges,
                           const std::map<int, Arc>& arcs_by_index) {
  std::vector<Edge> ev(edges.begin(), edges.end());
  std::vector<Arc> av;
  av.reserve(arcs_by_index.size());
  for (const auto& [idx, arc] : arcs_by_index) av.push_back(arc);
  return MixedGraph(n, std::move(ev), std::move(av));
}

// Decomposes s.mixed against the underlying graph: which edge indices are
// present as edges, and which arc orients which edge index.
struct StageView {
  std::set<Edge> edges;
  std::map<int, Arc> arcs;  // edge index -> arc
};

StageView view_of(const StagedMixed& s) {
  const Graph& g = *s.graph;
  StageView v;
  for (const Edge& e : s.mixed.edges()) v.edges.insert(e);
  for (const Arc& a : s.mixed.arcs()) {
    const int idx = g.edge_index(a.from, a.to);
    if (idx < 0) throw precondition_error("arc does not orient an edge of the graph");
    v.arcs.emplace(idx, a);
  }
  return v;
}

}  // namespace

void validate_stage(const StagedMixed& s) {
  if (s.graph == nullptr) throw precondition_error("staged state has no graph");
  const Graph& g = *s.graph;
  const int m = g.edge_count();
  if (s.stage < 0 || s.stage > m) throw precondition_error("stage out of range");
  if (s.mixed.vertex_count() != g.vertex_count())
    throw precondition_error("vertex count mismatch");

  const StageView v = view_of(s);
  if (static_cast<int>(v.arcs.size()) != static_cast<int>(s.mixed.arcs().size()))
    throw precondition_error("arcs do not orient distinct edges");

  std::vector<int> edge_indices;
  for (const Edge& e : v.edges) {
    const int idx = g.edge_index(e.u, e.v);
    if (idx < 0 || idx >= s.stage)
      throw precondition_error("edge outside the first stage edges");
    edge_indices.push_back(idx);
  }
  for (int i = s.stage; i < m; ++i)
    if (!v.arcs.count(i))
      throw precondition_error("later edge is not oriented");
  for (const auto& [idx, arc] : v.arcs)
    if (idx < s.stage) throw precondition_error("early edge is oriented");

  if (!mixed_is_acyclic(s.mixed)) throw precondition_error("stage state has a cycle");
  if (!is_nbc(g, EdgeSubset(std::move(edge_indices))))
    throw precondition_error("stage edge set contains a broken circuit");
}

StagedMixed stage_from_orientation(const Graph& g, const Orientation& o) {
  const MixedGraph m = to_mixed(g, o);
  if (!mixed_is_acyclic(m)) throw precondition_error("orientation is not acyclic");
  return StagedMixed{&g, 0, m};
}

StagedMixed stage_from_subset(const Graph& g, const EdgeSubset& s) {
  if (!s.empty() && s.indices().back() >= g.edge_count())
    throw invalid_input_error("edge index out of range");
  if (!is_nbc(g, s)) throw precondition_error("subset contains a broken circuit");
  std::vector<Edge> edges;
  for (int i : s.indices()) edges.push_back(g.edge(i));
  return StagedMixed{&g, g.edge_count(),
                     MixedGraph(g.vertex_count(), std::move(edges), {})};
}

StagedMixed forward_step(const StagedMixed& s, int i, StepInfo* info) {
  validate_stage(s);
  const Graph& g = *s.graph;
  if (i != s.stage + 1 || i > g.edge_count())
    throw precondition_error("step index does not match stage");

  StageView v = view_of(s);
  const Arc a = v.arcs.at(i - 1);
  v.arcs.erase(i - 1);
  const bool normal = (a.from < a.to);

  StepInfo local;
  local.edge_index = i - 1;
  StagedMixed out{&g, i, MixedGraph()};
  if (!normal) {
    local.action = "removed";
    local.violated_rule = "A";
    out.mixed = with_edges_arcs(g.vertex_count(), v.edges, v.arcs);
  } else {
    auto unoriented_edges = v.edges;
    unoriented_edges.insert(g.edge(i - 1));
    MixedGraph unoriented = with_edges_arcs(g.vertex_count(), unoriented_edges, v.arcs);
    if (mixed_is_acyclic(unoriented)) {
      local.action = "unoriented";
      out.mixed = std::move(unoriented);
    } else {
      local.action = "removed";
      local.violated_rule = "B";
      out.mixed = with_edges_arcs(g.vertex_count(), v.edges, v.arcs);
    }
  }
  if (info) *info = local;
  return out;
}

StagedMixed backward_step(const StagedMixed& s, int i, StepInfo* info) {
  validate_stage(s);
  const Graph& g = *s.graph;
  if (i != s.stage || i < 1) throw precondition_error("step index does not match stage");

  StageView v = view_of(s);
  const Edge e = g.edge(i - 1);
  const bool present = v.edges.count(e) > 0;
  v.edges.erase(e);

  StepInfo local;
  local.edge_index = i - 1;
  StagedMixed out{&g, i - 1, MixedGraph()};
  if (present) {
    local.action = "oriented-normal";
    local.violated_rule = "A'";
    v.arcs.emplace(i - 1, Arc{e.u, e.v});
    out.mixed = with_edges_arcs(g.vertex_count(), v.edges, v.arcs);
  } else {
    auto abnormal_arcs = v.arcs;
    abnormal_arcs.emplace(i - 1, Arc{e.v, e.u});
    MixedGraph abnormal = with_edges_arcs(g.vertex_count(), v.edges, abnormal_arcs);
    if (mixed_is_acyclic(abnormal)) {
      local.action = "oriented-abnormal";
      out.mixed = std::move(abnormal);
    } else {
      local.action = "oriented-normal";
      local.violated_rule = "B'";
      v.arcs.emplace(i - 1, Arc{e.u, e.v});
      out.mixed = with_edges_arcs(g.vertex_count(), v.edges, v.arcs);
    }
  }
  if (info) *info = local;
  return out;
}

namespace {

EdgeSubset subset_of_stage_m(const StagedMixed& s) {
  const Graph& g = *s.graph;
  std::vector<int> idx;
  for (const Edge& e : s.mixed.edges()) idx.push_back(g.edge_index(e.u, e.v));
  return EdgeSubset(std::move(idx));
}

Orientation orientation_of_stage_0(const StagedMixed& s) {
  const Graph& g = *s.graph;
  Orientation o;
  o.normal.assign(g.edge_count(), true);
  for (const Arc& a : s.mixed.arcs()) {
    const int idx = g.edge_index(a.from, a.to);
    o.normal[idx] = (a.from < a.to);
  }
  return o;
}

}  // namespace

EdgeSubset orientation_to_nbc(const Graph& g, const Orientation& o) {
  StagedMixed s = stage_from_orientation(g, o);
  for (int i = 1; i <= g.edge_count(); ++i) s = forward_step(s, i);
  return subset_of_stage_m(s);
}

Orientation nbc_to_orientation(const Graph& g, const EdgeSubset& subset) {
  StagedMixed s = stage_from_subset(g, subset);
  for (int i = g.edge_count(); i >= 1; --i) s = backward_step(s, i);
  return orientation_of_stage_0(s);
}

std::vector<TraceEntry> trace_orientation_to_nbc(const Graph& g, const Orientation& o) {
  std::vector<TraceEntry> trace;
  StagedMixed s = stage_from_orientation(g, o);
  trace.push_back(TraceEntry{s, StepInfo{}});
  for (int i = 1; i <= g.edge_count(); ++i) {
    StepInfo info;
    s = forward_step(s, i, &info);
    trace.push_back(TraceEntry{s, info});
  }
  return trace;
}

std::vector<TraceEntry> trace_nbc_to_orientation(const Graph& g, const EdgeSubset& subset) {
  std::vector<TraceEntry> trace;
  StagedMixed s = stage_from_subset(g, subset);
  trace.push_back(TraceEntry{s, StepInfo{}});
  for (int i = g.edge_count(); i >= 1; --i) {
    StepInfo info;
    s = backward_step(s, i, &info);
    trace.push_back(TraceEntry{s, info});
  }
  return trace;
}

namespace {

// Monochromatic-edge subgraph of one color class, with the induced edge
// order and a map back to global edge indices.
struct ColorClass {
  Graph subgraph;
  std::vector<int> global_index;
};

std::map<int, ColorClass> color_classes(const Graph& g, const Coloring& k) {
  std::map<int, std::vector<int>> indices_by_color;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (k.colors[e.u] == k.colors[e.v]) indices_by_color[k.colors[e.u]].push_back(i);
  }
  std::map<int, ColorClass> out;
  for (auto& [color, idx] : indices_by_color) {
    std::vector<Edge> edges;
    edges.reserve(idx.size());
    for (int i : idx) edges.push_back(g.edge(i));
    out.emplace(color,
                ColorClass{Graph(g.vertex_count(), std::move(edges)), std::move(idx)});
  }
  return out;
}

}  // namespace

EdgeSubset compatible_to_nbc(const Graph& g, const Coloring& k, const Orientation& o) {
  validate_coloring(g, k);
  if (!mixed_is_acyclic(to_mixed(g, o)))
    throw precondition_error("orientation is not acyclic");
  if (!is_compatible(g, o, k))
    throw precondition_error("orientation is not compatible with the coloring");

  std::vector<int> result;
  for (const auto& [color, cls] : color_classes(g, k)) {
    Orientation sub;
    sub.normal.reserve(cls.global_index.size());
    for (int i : cls.global_index) sub.normal.push_back(o.normal[i]);
    const EdgeSubset local = orientation_to_nbc(cls.subgraph, sub);
    for (int j : local.indices()) result.push_back(cls.global_index[j]);
  }
  return EdgeSubset(std::move(result));
}

Orientation nbc_to_compatible(const Graph& g, const Coloring& k, const EdgeSubset& s) {
  validate_coloring(g, k);
  if (!s.empty() && s.indices().back() >= g.edge_count())
    throw invalid_input_error("edge index out of range");
  if (!is_nbc(g, s)) throw precondition_error("subset contains a broken circuit");
  if (!is_monochromatic_on(g, s, k))
    throw precondition_error("coloring is not monochromatic on the subset");

  Orientation o;
  o.normal.assign(g.edge_count(), true);
  // Arcs between color classes are forced toward the larger color.
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (k.colors[e.u] != k.colors[e.v]) o.normal[i] = k.colors[e.u] < k.colors[e.v];
  }
  for (const auto& [color, cls] : color_classes(g, k)) {
    std::vector<int> local;
    for (std::size_t j = 0; j < cls.global_index.size(); ++j)
      if (s.contains(cls.global_index[j])) local.push_back(static_cast<int>(j));
    const Orientation sub = nbc_to_orientation(cls.subgraph, EdgeSubset(std::move(local)));
    for (std::size_t j = 0; j < cls.global_index.size(); ++j)
      o.normal[cls.global_index[j]] = sub.normal[j];
  }
  return o;
}

}  // namespace chromabij
