#include "chromabij/chromatic.hpp"

#include <chrono>
#include <utility>

#include "chromabij/coloring.hpp"
#include "chromabij/detail/union_find.hpp"
#include "chromabij/errors.hpp"

namespace chromabij {

namespace {

std::uint64_t checked_subset_count(int m, const Budget& budget) {
  if (m < 0 || m >= 63) throw budget_error("too many edges for subset enumeration");
  const std::uint64_t total = std::uint64_t{1} << m;
  if (total > budget.max_subsets)
    throw budget_error("subset enumeration exceeds budget");
  return total;
}

// Depth-first include/exclude over the edge sequence with a rollback
// union-find. `on_leaf(k, c)` receives |S| and c(S) for each subset.
template <typename F>
void all_subsets_dfs(const Graph& g, int edge, detail::RollbackUnionFind& uf,
                     int included, int comps, F& on_leaf) {
  if (edge == g.edge_count()) {
    on_leaf(included, comps);
    return;
  }
  all_subsets_dfs(g, edge + 1, uf, included, comps, on_leaf);
  const Edge& e = g.edge(edge);
  const std::size_t mark = uf.mark();
  const bool merged = uf.unite(e.u, e.v);
  all_subsets_dfs(g, edge + 1, uf, included + 1, comps - (merged ? 1 : 0), on_leaf);
  uf.rollback_to(mark);
}

}  // namespace

BigInt chromatic_count(const Graph& g, int t, const Budget& budget) {
  BigInt count = 0;
  for_each_coloring(g, t, budget, [&](const Coloring& k) {
    if (is_proper(g, k)) ++count;
  });
  return count;
}

IntPolynomial chromatic_poly_all_subgraphs(const Graph& g, const Budget& budget) {
  checked_subset_count(g.edge_count(), budget);
  const int n = g.vertex_count();
  std::vector<BigInt> coeffs(n + 1, BigInt(0));
  detail::RollbackUnionFind uf(n);
  auto on_leaf = [&](int included, int comps) {
    coeffs[comps] += (included % 2 == 0) ? 1 : -1;
  };
  all_subsets_dfs(g, 0, uf, 0, n, on_leaf);
  return IntPolynomial(std::move(coeffs));
}

namespace {

struct NbcState {
  const Graph& g;
  detail::RollbackUnionFind uf;
  std::vector<BigInt>& a;
  std::uint64_t visited = 0;
  std::uint64_t limit;
};

void nbc_dfs(NbcState& st, int edge, int included) {
  if (edge == st.g.edge_count()) {
    if (++st.visited > st.limit) throw budget_error("NBC enumeration exceeds budget");
    st.a[included] += 1;
    return;
  }
  const Edge& e = st.g.edge(edge);
  // Chosen earlier edges connecting u and v complete a broken circuit whose
  // cycle tops out at this edge; every extension of the current choice is
  // dead, whether or not this edge itself joins.
  if (st.uf.connected(e.u, e.v)) return;
  nbc_dfs(st, edge + 1, included);
  const std::size_t mark = st.uf.mark();
  st.uf.unite(e.u, e.v);
  nbc_dfs(st, edge + 1, included + 1);
  st.uf.rollback_to(mark);
}

}  // namespace

NbcExpansion nbc_expansion(const Graph& g, const Budget& budget) {
  const int n = g.vertex_count();
  NbcExpansion out;
  out.coefficients.assign(n + 1, BigInt(0));
  NbcState st{g, detail::RollbackUnionFind(n), out.coefficients, 0, budget.max_subsets};
  nbc_dfs(st, 0, 0);
  out.subsets_visited = st.visited;

  // Every NBC subset is a forest, so k edges leave n - k components.
  std::vector<BigInt> coeffs(n + 1, BigInt(0));
  for (int k = 0; k <= n; ++k) {
    if (out.coefficients[k] == 0) continue;
    const BigInt term = (k % 2 == 0) ? out.coefficients[k] : -out.coefficients[k];
    coeffs[n - k] += term;
  }
  out.poly = IntPolynomial(std::move(coeffs));
  return out;
}

IntPolynomial chromatic_poly_nbc(const Graph& g, const Budget& budget) {
  return nbc_expansion(g, budget).poly;
}

namespace {

IntPolynomial delcon(const Graph& g, std::uint64_t& nodes, const Budget& budget) {
  if (++nodes > budget.max_subsets)
    throw budget_error("deletion-contraction recursion exceeds budget");
  const int m = g.edge_count();
  if (m == 0) return IntPolynomial::monomial(1, g.vertex_count());

  const Edge e = g.edge(m - 1);
  std::vector<Edge> deleted(g.edges().begin(), g.edges().end() - 1);
  Graph g_minus(g.vertex_count(), std::move(deleted));

  // Contract e: merge v into u, relabel vertices above v down by one, drop
  // the loop and collapse parallel edges.
  std::vector<Edge> contracted;
  for (int i = 0; i + 1 < m; ++i) {
    int a = g.edge(i).u;
    int b = g.edge(i).v;
    if (a == e.v) a = e.u;
    if (b == e.v) b = e.u;
    if (a == b) continue;
    if (a > e.v) --a;
    if (b > e.v) --b;
    contracted.push_back(a < b ? Edge{a, b} : Edge{b, a});
  }
  std::sort(contracted.begin(), contracted.end());
  contracted.erase(std::unique(contracted.begin(), contracted.end()),
                   contracted.end());
  Graph g_contract(g.vertex_count() - 1, std::move(contracted));

  return delcon(g_minus, nodes, budget) - delcon(g_contract, nodes, budget);
}

}  // namespace

IntPolynomial chromatic_poly_deletion_contraction(const Graph& g, const Budget& budget) {
  std::uint64_t nodes = 0;
  return delcon(g, nodes, budget);
}

std::vector<BigInt> nbc_coefficients(const Graph& g, const Budget& budget) {
  return nbc_expansion(g, budget).coefficients;
}

bool is_log_concave(const std::vector<BigInt>& a) {
  for (std::size_t k = 1; k + 1 < a.size(); ++k)
    if (a[k] * a[k] < a[k - 1] * a[k + 1]) return false;
  return true;
}

namespace {

// DAG test specialized to all-arc mixed graphs (Kahn's algorithm over raw
// arc lists; avoids building MixedGraph values in enumeration loops).
bool arcs_acyclic(int n, const std::vector<Arc>& arcs, std::vector<int>& indegree,
                  std::vector<std::vector<int>>& out, std::vector<int>& stack) {
  for (int v = 0; v < n; ++v) {
    indegree[v] = 0;
    out[v].clear();
  }
  for (const Arc& a : arcs) {
    out[a.from].push_back(a.to);
    ++indegree[a.to];
  }
  stack.clear();
  for (int v = 0; v < n; ++v)
    if (indegree[v] == 0) stack.push_back(v);
  int removed = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++removed;
    for (int w : out[v])
      if (--indegree[w] == 0) stack.push_back(w);
  }
  return removed == n;
}

template <typename F>
void for_each_acyclic_orientation(const Graph& g, const Budget& budget, F&& fn) {
  const std::uint64_t total = checked_subset_count(g.edge_count(), budget);
  const int n = g.vertex_count();
  const int m = g.edge_count();
  std::vector<Arc> arcs(m);
  std::vector<int> indegree(n);
  std::vector<std::vector<int>> out(n);
  std::vector<int> stack;
  Orientation o;
  o.normal.assign(m, false);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int i = 0; i < m; ++i) {
      const bool fwd = (mask >> i) & 1;
      o.normal[i] = fwd;
      const Edge& e = g.edge(i);
      arcs[i] = fwd ? Arc{e.u, e.v} : Arc{e.v, e.u};
    }
    if (arcs_acyclic(n, arcs, indegree, out, stack))
      fn(static_cast<const Orientation&>(o), arcs);
  }
}

}  // namespace

BigInt acyclic_orientation_count(const Graph& g, const Budget& budget) {
  BigInt count = 0;
  for_each_acyclic_orientation(g, budget,
                               [&](const Orientation&, const std::vector<Arc>&) { ++count; });
  return count;
}

std::vector<Orientation> acyclic_orientations(const Graph& g, const Budget& budget) {
  std::vector<Orientation> out;
  for_each_acyclic_orientation(
      g, budget, [&](const Orientation& o, const std::vector<Arc>&) { out.push_back(o); });
  return out;
}

BigInt compatible_pair_count(const Graph& g, int t, const Budget& budget) {
  checked_coloring_count(g, t, budget);
  BigInt pairs = 0;
  for_each_acyclic_orientation(g, budget, [&](const Orientation&, const std::vector<Arc>& arcs) {
    for_each_coloring(g, t, budget, [&](const Coloring& k) {
      for (const Arc& a : arcs)
        if (k.colors[a.from] > k.colors[a.to]) return;
      ++pairs;
    });
  });
  return pairs;
}

BenchResult bench_expansions(const Graph& g, const Budget& budget) {
  using clock = std::chrono::steady_clock;
  BenchResult r;

  const auto t0 = clock::now();
  const IntPolynomial full = chromatic_poly_all_subgraphs(g, budget);
  const auto t1 = clock::now();
  const NbcExpansion nbc = nbc_expansion(g, budget);
  const auto t2 = clock::now();

  r.full_subsets = std::uint64_t{1} << g.edge_count();
  r.nbc_subsets = nbc.subsets_visited;
  r.full_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  r.nbc_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
  r.agree = (full == nbc.poly);
  r.poly = full;
  return r;
}

}  // namespace chromabij
