#include "chromabij/graph.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "chromabij/detail/union_find.hpp"
#include "chromabij/errors.hpp"

namespace chromabij {

namespace {

Edge normalized(int u, int v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

void check_endpoints(int n, int u, int v, const char* what) {
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw invalid_input_error(std::string(what) + " endpoint out of range");
  if (u == v) throw invalid_input_error(std::string(what) + " is a loop");
}

void check_subset(const Graph& g, const EdgeSubset& s) {
  if (!s.empty() && s.indices().back() >= g.edge_count())
    throw invalid_input_error("edge index out of range");
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> ordered_edges) : n_(vertex_count) {
  if (vertex_count < 0) throw invalid_input_error("negative vertex count");
  std::set<Edge> seen;
  for (Edge& e : ordered_edges) {
    check_endpoints(n_, e.u, e.v, "edge");
    e = normalized(e.u, e.v);
    if (!seen.insert(e).second) throw invalid_input_error("duplicate edge");
  }
  edges_ = std::move(ordered_edges);
}

Graph Graph::from_edge_set(int vertex_count, std::vector<Edge> edges) {
  for (Edge& e : edges) {
    check_endpoints(vertex_count, e.u, e.v, "edge");
    e = normalized(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  return Graph(vertex_count, std::move(edges));
}

const Edge& Graph::edge(int index) const {
  if (index < 0 || index >= edge_count())
    throw invalid_input_error("edge index out of range");
  return edges_[index];
}

int Graph::edge_index(int u, int v) const {
  const Edge e = normalized(u, v);
  for (int i = 0; i < edge_count(); ++i)
    if (edges_[i] == e) return i;
  return -1;
}

EdgeSubset::EdgeSubset(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (!indices_.empty() && indices_.front() < 0)
    throw invalid_input_error("negative edge index");
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
    throw invalid_input_error("duplicate edge index");
}

EdgeSubset EdgeSubset::from_mask(std::uint64_t mask) {
  std::vector<int> idx;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1) idx.push_back(i);
  EdgeSubset s;
  s.indices_ = std::move(idx);  // already sorted and unique
  return s;
}

bool EdgeSubset::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

EdgeSubset EdgeSubset::toggled(int index) const {
  EdgeSubset out = *this;
  auto it = std::lower_bound(out.indices_.begin(), out.indices_.end(), index);
  if (it != out.indices_.end() && *it == index)
    out.indices_.erase(it);
  else
    out.indices_.insert(it, index);
  return out;
}

VertexPartition components(const Graph& g, const EdgeSubset& s) {
  check_subset(g, s);
  const int n = g.vertex_count();
  detail::UnionFind uf(n);
  for (int i : s.indices()) uf.unite(g.edge(i).u, g.edge(i).v);

  // Group by root; visiting vertices in ascending order makes each block
  // ascending and orders blocks by their minimum vertex.
  std::vector<int> block_of(n, -1);
  VertexPartition part;
  for (int v = 0; v < n; ++v) {
    const int r = uf.find(v);
    if (block_of[r] < 0) {
      block_of[r] = static_cast<int>(part.blocks.size());
      part.blocks.emplace_back();
    }
    part.blocks[block_of[r]].push_back(v);
  }
  return part;
}

int component_count(const Graph& g, const EdgeSubset& s) {
  check_subset(g, s);
  int c = g.vertex_count();
  detail::UnionFind uf(g.vertex_count());
  for (int i : s.indices())
    if (uf.unite(g.edge(i).u, g.edge(i).v)) --c;
  return c;
}

Partition component_partition(const Graph& g, const EdgeSubset& s) {
  check_subset(g, s);
  const int n = g.vertex_count();
  detail::RollbackUnionFind uf(n);
  for (int i : s.indices()) uf.unite(g.edge(i).u, g.edge(i).v);
  std::vector<int> sizes;
  for (int v = 0; v < n; ++v)
    if (uf.find(v) == v) sizes.push_back(uf.size_of_root(v));
  return Partition::from_unsorted(std::move(sizes));
}

bool is_forest(const Graph& g, const EdgeSubset& s) {
  return component_count(g, s) == g.vertex_count() - s.size();
}

bool is_nbc(const Graph& g, const EdgeSubset& s) {
  check_subset(g, s);
  detail::UnionFind uf(g.vertex_count());
  auto next = s.indices().begin();
  for (int f = 0; f < g.edge_count(); ++f) {
    const Edge& e = g.edge(f);
    // Members of s strictly earlier than f are already united below.
    if (uf.find(e.u) == uf.find(e.v)) return false;
    if (next != s.indices().end() && *next == f) {
      uf.unite(e.u, e.v);
      ++next;
    }
  }
  return true;
}

namespace {

// Enumerates the edge sets of all cycles of g. Each cycle is rooted at its
// minimum vertex and traversed with second vertex < last vertex, so it is
// produced exactly once.
void cycle_dfs(const Graph& g, const std::vector<std::vector<std::pair<int, int>>>& adj,
               int root, int current, std::vector<bool>& on_path,
               std::vector<int>& path_edges, std::set<std::vector<int>>& cycles) {
  for (const auto& [next, via] : adj[current]) {
    if (next == root && path_edges.size() >= 2) {
      const int first_vertex =
          g.edge(path_edges.front()).u == root ? g.edge(path_edges.front()).v
                                               : g.edge(path_edges.front()).u;
      if (first_vertex < current) {
        std::vector<int> cycle = path_edges;
        cycle.push_back(via);
        std::sort(cycle.begin(), cycle.end());
        cycles.insert(std::move(cycle));
      }
    } else if (next > root && !on_path[next]) {
      on_path[next] = true;
      path_edges.push_back(via);
      cycle_dfs(g, adj, root, next, on_path, path_edges, cycles);
      path_edges.pop_back();
      on_path[next] = false;
    }
  }
}

}  // namespace

std::vector<EdgeSubset> broken_circuits(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int i = 0; i < g.edge_count(); ++i) {
    adj[g.edge(i).u].emplace_back(g.edge(i).v, i);
    adj[g.edge(i).v].emplace_back(g.edge(i).u, i);
  }

  std::set<std::vector<int>> cycles;
  std::vector<bool> on_path(n, false);
  std::vector<int> path_edges;
  for (int root = 0; root < n; ++root) {
    on_path[root] = true;
    cycle_dfs(g, adj, root, root, on_path, path_edges, cycles);
    on_path[root] = false;
  }

  std::set<std::vector<int>> broken;
  for (const auto& cycle : cycles) {
    std::vector<int> b(cycle.begin(), cycle.end() - 1);  // drop max edge
    broken.insert(std::move(b));
  }

  std::vector<EdgeSubset> out;
  out.reserve(broken.size());
  for (const auto& b : broken) out.emplace_back(b);
  std::stable_sort(out.begin(), out.end(), [](const EdgeSubset& a, const EdgeSubset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.indices() < b.indices();
  });
  return out;
}

MixedGraph::MixedGraph(int vertex_count, std::vector<Edge> edges, std::vector<Arc> arcs)
    : n_(vertex_count) {
  if (vertex_count < 0) throw invalid_input_error("negative vertex count");
  std::set<Edge> edge_set;
  for (Edge& e : edges) {
    check_endpoints(n_, e.u, e.v, "edge");
    e = normalized(e.u, e.v);
    if (!edge_set.insert(e).second) throw invalid_input_error("duplicate edge");
  }
  std::set<Arc> arc_set;
  for (const Arc& a : arcs) {
    check_endpoints(n_, a.from, a.to, "arc");
    if (!arc_set.insert(a).second) throw invalid_input_error("duplicate arc");
    if (arc_set.count(Arc{a.to, a.from}))
      throw invalid_input_error("opposite arcs on one vertex pair");
    if (edge_set.count(normalized(a.from, a.to)))
      throw invalid_input_error("vertex pair occurs as both edge and arc");
  }
  edges_.assign(edge_set.begin(), edge_set.end());
  arcs_.assign(arc_set.begin(), arc_set.end());
}

bool MixedGraph::has_edge(int u, int v) const {
  return std::binary_search(edges_.begin(), edges_.end(), normalized(u, v));
}

bool MixedGraph::has_arc(int from, int to) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{from, to});
}

bool Walk::traverses_arc() const {
  for (const WalkStep& s : steps)
    if (s.via_arc) return true;
  return false;
}

Arc normal_arc(const Graph& g, int edge_index) {
  const Edge& e = g.edge(edge_index);
  return Arc{e.u, e.v};
}

Arc arc_of(const Graph& g, const Orientation& o, int edge_index) {
  if (o.normal.size() != static_cast<std::size_t>(g.edge_count()))
    throw invalid_input_error("orientation size does not match edge count");
  const Edge& e = g.edge(edge_index);
  return o.normal[edge_index] ? Arc{e.u, e.v} : Arc{e.v, e.u};
}

MixedGraph to_mixed(const Graph& g, const Orientation& o) {
  std::vector<Arc> arcs;
  arcs.reserve(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) arcs.push_back(arc_of(g, o, i));
  return MixedGraph(g.vertex_count(), {}, std::move(arcs));
}

namespace {

// Kahn's algorithm on the contracted arc digraph; nodes are union-find
// roots of the undirected-edge components.
bool contracted_digraph_acyclic(int n, const std::vector<Arc>& arcs,
                                detail::UnionFind& uf) {
  std::vector<std::vector<int>> out(n);
  std::vector<int> indegree(n, 0);
  for (const Arc& a : arcs) {
    const int cu = uf.find(a.from);
    const int cv = uf.find(a.to);
    if (cu == cv) return false;  // arc inside one component closes a cycle
    out[cu].push_back(cv);
    ++indegree[cv];
  }
  std::vector<int> stack;
  int nodes = 0;
  for (int v = 0; v < n; ++v)
    if (uf.find(v) == v) {
      ++nodes;
      if (indegree[v] == 0) stack.push_back(v);
    }
  int removed = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++removed;
    for (int w : out[v])
      if (--indegree[w] == 0) stack.push_back(w);
  }
  return removed == nodes;
}

}  // namespace

bool mixed_is_acyclic(const MixedGraph& m) {
  detail::UnionFind uf(m.vertex_count());
  for (const Edge& e : m.edges())
    if (!uf.unite(e.u, e.v)) return false;  // undirected cycle
  return contracted_digraph_acyclic(m.vertex_count(), m.arcs(), uf);
}

void validate_walk(const MixedGraph& m, const Walk& walk) {
  int at = walk.start;
  if (at < 0 || at >= m.vertex_count())
    throw precondition_error("walk start out of range");
  for (const WalkStep& s : walk.steps) {
    if (s.from != at) throw precondition_error("walk steps do not chain");
    if (s.via_arc) {
      if (!m.has_arc(s.from, s.to)) throw precondition_error("walk uses missing arc");
    } else {
      if (!m.has_edge(s.from, s.to)) throw precondition_error("walk uses missing edge");
    }
    at = s.to;
  }
}

Walk extract_cycle(const MixedGraph& m, const Walk& walk) {
  validate_walk(m, walk);
  if (!walk.closed()) throw precondition_error("walk is not closed");
  if (!walk.traverses_arc()) throw precondition_error("walk traverses no arc");

  Walk w = walk;
  for (;;) {
    const int k = static_cast<int>(w.steps.size());
    std::vector<int> verts(k + 1);
    verts[0] = w.start;
    for (int i = 0; i < k; ++i) verts[i + 1] = w.steps[i].to;

    int split_i = -1, split_j = -1;
    for (int i = 0; i < k && split_i < 0; ++i)
      for (int j = i + 1; j <= k; ++j) {
        if (i == 0 && j == k) continue;  // the closing repeat is allowed
        if (verts[i] == verts[j]) {
          split_i = i;
          split_j = j;
          break;
        }
      }
    if (split_i < 0) break;

    // Two shorter closed walks; keep one that still traverses an arc.
    Walk inner;
    inner.start = verts[split_i];
    inner.steps.assign(w.steps.begin() + split_i, w.steps.begin() + split_j);
    Walk outer;
    outer.start = verts[split_j];
    outer.steps.assign(w.steps.begin() + split_j, w.steps.end());
    outer.steps.insert(outer.steps.end(), w.steps.begin(), w.steps.begin() + split_i);
    w = inner.traverses_arc() ? std::move(inner) : std::move(outer);
  }
  return w;
}

}  // namespace chromabij
