#pragma once

#include <cstdint>
#include <vector>

#include "chromabij/partition.hpp"

namespace chromabij {

/// Undirected edge, stored with u < v.
struct Edge {
  int u;
  int v;
  friend bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v;
  }
  friend bool operator!=(const Edge& a, const Edge& b) { return !(a == b); }
  friend bool operator<(const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
};

/// Directed edge.
struct Arc {
  int from;
  int to;
  friend bool operator==(const Arc& a, const Arc& b) {
    return a.from == b.from && a.to == b.to;
  }
  friend bool operator!=(const Arc& a, const Arc& b) { return !(a == b); }
  friend bool operator<(const Arc& a, const Arc& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  }
};

/// Simple loop-free graph on vertices 0..n-1 with a fixed total order on the
/// edges: position in the edge sequence IS the order e_1 < e_2 < ... < e_m.
/// Everything downstream (broken circuits, the staged bijections) depends on
/// this order.
class Graph {
 public:
  Graph() = default;

  /// Keeps the given edge sequence as the edge order. Endpoints are
  /// normalized to (min, max); duplicates, loops and out-of-range endpoints
  /// are rejected.
  Graph(int vertex_count, std::vector<Edge> ordered_edges);

  /// Default order for an unordered edge set: lexicographic by (min, max).
  static Graph from_edge_set(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const Edge& edge(int index) const;
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Index of the edge with the given endpoints, or -1.
  int edge_index(int u, int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Subset of a graph's edge indices, kept sorted ascending.
class EdgeSubset {
 public:
  EdgeSubset() = default;
  /// Sorts; rejects negative or duplicate indices.
  explicit EdgeSubset(std::vector<int> indices);

  static EdgeSubset from_mask(std::uint64_t mask);

  const std::vector<int>& indices() const noexcept { return indices_; }
  int size() const noexcept { return static_cast<int>(indices_.size()); }
  bool empty() const noexcept { return indices_.empty(); }
  bool contains(int index) const;

  /// Adds the index if absent, removes it if present.
  EdgeSubset toggled(int index) const;

  friend bool operator==(const EdgeSubset& a, const EdgeSubset& b) {
    return a.indices_ == b.indices_;
  }
  friend bool operator!=(const EdgeSubset& a, const EdgeSubset& b) {
    return !(a == b);
  }
  friend bool operator<(const EdgeSubset& a, const EdgeSubset& b) {
    return a.indices_ < b.indices_;
  }

 private:
  std::vector<int> indices_;
};

/// Partition of the vertex set into disjoint blocks covering 0..n-1.
/// Blocks are ordered by minimum vertex, vertices ascending inside a block.
struct VertexPartition {
  std::vector<std::vector<int>> blocks;
};

/// Vertices plus a set of undirected edges and a set of arcs. No vertex
/// pair may occur both as an edge and as an arc (in either direction), and
/// no pair occurs as two opposite arcs.
class MixedGraph {
 public:
  MixedGraph() = default;
  MixedGraph(int vertex_count, std::vector<Edge> edges, std::vector<Arc> arcs);

  int vertex_count() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  bool has_edge(int u, int v) const;
  bool has_arc(int from, int to) const;

  friend bool operator==(const MixedGraph& a, const MixedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;  // sorted, unique
  std::vector<Arc> arcs_;    // sorted, unique
};

/// Orientation of a graph's edges: one direction bit per edge, true meaning
/// the arc runs from the lower-indexed endpoint to the higher-indexed one
/// (the "normal" direction). The owning Graph is passed alongside wherever
/// it is needed.
struct Orientation {
  std::vector<bool> normal;

  friend bool operator==(const Orientation& a, const Orientation& b) {
    return a.normal == b.normal;
  }
  friend bool operator!=(const Orientation& a, const Orientation& b) {
    return !(a == b);
  }
};

/// One step of a walk: an edge or an arc together with the direction it is
/// traversed in. Arcs are only ever traversed forward.
struct WalkStep {
  bool via_arc;
  int from;
  int to;
  friend bool operator==(const WalkStep& a, const WalkStep& b) {
    return a.via_arc == b.via_arc && a.from == b.from && a.to == b.to;
  }
};

/// Alternating vertex/element sequence v0, c1, v1, ..., ck, vk encoded as a
/// start vertex plus steps.
struct Walk {
  int start = 0;
  std::vector<WalkStep> steps;

  int end() const { return steps.empty() ? start : steps.back().to; }
  bool closed() const { return end() == start; }
  bool traverses_arc() const;
};

// --- spanning-subgraph machinery -----------------------------------------

/// Connected components of the spanning subgraph (V, s).
VertexPartition components(const Graph& g, const EdgeSubset& s);

/// c(S): number of components of the spanning subgraph.
int component_count(const Graph& g, const EdgeSubset& s);

/// Component sizes in weakly decreasing order; a partition of n into c(S)
/// parts.
Partition component_partition(const Graph& g, const EdgeSubset& s);

/// True iff (V, s) contains no cycle; equivalently c(S) = n - |S|.
bool is_forest(const Graph& g, const EdgeSubset& s);

/// True iff s contains no broken circuit (a cycle minus its largest edge).
/// Decided by a single sweep: s fails iff some edge f = uv of g has its
/// endpoints already connected by the members of s that precede f.
bool is_nbc(const Graph& g, const EdgeSubset& s);

/// All broken circuits of g, deduplicated and ordered by (size, indices).
/// Enumerates every cycle by depth-first search, so desk scale only.
std::vector<EdgeSubset> broken_circuits(const Graph& g);

// --- mixed graphs ---------------------------------------------------------

/// The normal orientation of edge `edge_index`: lower endpoint -> higher.
Arc normal_arc(const Graph& g, int edge_index);

/// The arc edge `edge_index` becomes under orientation `o`.
Arc arc_of(const Graph& g, const Orientation& o, int edge_index);

/// Orientation as a mixed graph with an empty edge set.
MixedGraph to_mixed(const Graph& g, const Orientation& o);

/// True iff m has no cycle (closed path on more than one vertex repeating
/// no vertex, edge or arc, arcs traversed forward only). Decided as:
/// (a) the undirected edges form a forest, and (b) contracting each
/// undirected component to a node leaves an arc digraph with no directed
/// cycle (a self-loop counts).
bool mixed_is_acyclic(const MixedGraph& m);

/// Throws precondition_error unless the walk's steps chain correctly and
/// every element belongs to m (arcs in their traversal direction).
void validate_walk(const MixedGraph& m, const Walk& walk);

/// Shortens a closed walk that traverses at least one arc down to a cycle of
/// m: repeatedly split at a repeated vertex and keep a shorter closed
/// sub-walk that still traverses an arc.
Walk extract_cycle(const MixedGraph& m, const Walk& walk);

}  // namespace chromabij
