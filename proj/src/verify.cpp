#include "chromabij/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "chromabij/bijections.hpp"
#include "chromabij/chromatic.hpp"
#include "chromabij/coloring.hpp"
#include "chromabij/errors.hpp"
#include "chromabij/involution.hpp"
#include "chromabij/io.hpp"

namespace chromabij {

void for_each_graph(int n, const std::function<void(const Graph&)>& fn,
                    const Budget& budget) {
  if (n < 1) throw invalid_input_error("need at least one vertex");
  if (n > budget.graph_enum_cap) throw budget_error("graph enumeration cap exceeded");
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back(Edge{u, v});
  const int p = static_cast<int>(pairs.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
    std::vector<Edge> edges;
    for (int k = 0; k < p; ++k)
      if ((mask >> k) & 1) edges.push_back(pairs[k]);
    fn(Graph(n, std::move(edges)));
  }
}

std::vector<Graph> enumerate_graphs(int n, const Budget& budget) {
  std::vector<Graph> out;
  for_each_graph(n, [&](const Graph& g) { out.push_back(g); }, budget);
  return out;
}

namespace {

Graph tree_from_pruefer(int n, const std::vector<int>& code) {
  std::vector<int> degree(n, 1);
  for (int v : code) ++degree[v];
  std::vector<Edge> edges;
  std::vector<bool> used(n, false);
  for (int v : code) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1 && !used[leaf]) {
        edges.push_back(leaf < v ? Edge{leaf, v} : Edge{v, leaf});
        used[leaf] = true;
        --degree[v];
        break;
      }
    }
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v)
    if (!used[v] && degree[v] == 1) (a < 0 ? a : b) = v;
  edges.push_back(a < b ? Edge{a, b} : Edge{b, a});
  return Graph::from_edge_set(n, std::move(edges));
}

}  // namespace

void for_each_tree(int n, const std::function<void(const Graph&)>& fn,
                   const Budget& budget) {
  if (n < 1) throw invalid_input_error("need at least one vertex");
  if (n > budget.tree_enum_cap) throw budget_error("tree enumeration cap exceeded");
  if (n == 1) {
    fn(Graph(1, {}));
    return;
  }
  if (n == 2) {
    fn(Graph(2, {Edge{0, 1}}));
    return;
  }
  std::vector<int> code(n - 2, 0);
  for (;;) {
    fn(tree_from_pruefer(n, code));
    int pos = n - 3;
    while (pos >= 0 && code[pos] == n - 1) code[pos--] = 0;
    if (pos < 0) break;
    ++code[pos];
  }
}

std::vector<Graph> enumerate_trees(int n, const Budget& budget) {
  std::vector<Graph> out;
  for_each_tree(n, [&](const Graph& g) { out.push_back(g); }, budget);
  return out;
}

Graph named_graph(std::string_view name) {
  if (name == "fig1")
    // Vertices u=0, v=1, w=2, x=3; edge order e1=uw, e2=uv, e3=vw, e4=vx.
    return Graph(4, {Edge{0, 2}, Edge{0, 1}, Edge{1, 2}, Edge{1, 3}});
  if (name == "butterfly")
    // Two triangles sharing vertex 0.
    return Graph::from_edge_set(
        5, {Edge{0, 1}, Edge{0, 2}, Edge{1, 2}, Edge{0, 3}, Edge{0, 4}, Edge{3, 4}});
  if (name == "kite")
    // 4-cycle 0-2-1-3-0 with chord 0-1 and a pendant at the cycle vertex 3.
    return Graph::from_edge_set(
        5, {Edge{0, 1}, Edge{0, 2}, Edge{0, 3}, Edge{1, 2}, Edge{1, 3}, Edge{3, 4}});
  if (name == "net")
    // Triangle 0-1-2 with a pendant edge at each vertex.
    return Graph::from_edge_set(
        6, {Edge{0, 1}, Edge{0, 2}, Edge{1, 2}, Edge{0, 3}, Edge{1, 4}, Edge{2, 5}});
  if (name == "x169")
    // Triangle 0-1-2 with a pendant edge and a pendant 2-path, both at 0.
    return Graph::from_edge_set(
        6, {Edge{0, 1}, Edge{0, 2}, Edge{1, 2}, Edge{0, 3}, Edge{0, 4}, Edge{4, 5}});
  throw invalid_input_error("unknown graph name: " + std::string(name));
}

std::vector<std::string> named_graph_names() {
  return {"butterfly", "kite", "net", "x169", "fig1"};
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> deg(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    ++deg[e.u];
    ++deg[e.v];
  }
  std::sort(deg.begin(), deg.end());
  return deg;
}

bool is_tree(const Graph& g) {
  if (g.edge_count() != g.vertex_count() - 1) return false;
  std::vector<int> all(g.edge_count());
  for (int i = 0; i < g.edge_count(); ++i) all[i] = i;
  return component_count(g, EdgeSubset(std::move(all))) == 1;
}

namespace {

std::vector<std::vector<int>> adjacency(const Graph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

// Centers of a tree by repeated leaf stripping; one or two vertices.
std::vector<int> tree_centers(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 1) return {0};
  auto adj = adjacency(g);
  std::vector<int> degree(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(adj[v].size());
    if (degree[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    remaining -= static_cast<int>(layer.size());
    for (int leaf : layer)
      for (int w : adj[leaf])
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string rooted_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> child_codes;
  for (int w : adj[v])
    if (w != parent) child_codes.push_back(rooted_code(adj, w, v));
  std::sort(child_codes.begin(), child_codes.end());
  std::string code = "(";
  for (const std::string& c : child_codes) code += c;
  code += ")";
  return code;
}

// Pairs up the vertices of two equal-code rooted trees by walking children
// in canonical (sorted-code) order.
void pair_rooted(const std::vector<std::vector<int>>& adj_a, int va, int pa,
                 const std::vector<std::vector<int>>& adj_b, int vb, int pb,
                 std::vector<int>& image) {
  image[va] = vb;
  auto sorted_children = [](const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::pair<std::string, int>> kids;
    for (int w : adj[v])
      if (w != parent) kids.emplace_back(rooted_code(adj, w, v), w);
    std::sort(kids.begin(), kids.end());
    return kids;
  };
  const auto ka = sorted_children(adj_a, va, pa);
  const auto kb = sorted_children(adj_b, vb, pb);
  for (std::size_t i = 0; i < ka.size(); ++i)
    pair_rooted(adj_a, ka[i].second, va, adj_b, kb[i].second, vb, image);
}

// Root choice shared by the code and the isomorphism reconstruction: the
// center whose rooted code is smallest.
std::pair<int, std::string> canonical_root(const Graph& g) {
  const auto adj = adjacency(g);
  int best = -1;
  std::string best_code;
  for (int c : tree_centers(g)) {
    std::string code = rooted_code(adj, c, -1);
    if (best < 0 || code < best_code) {
      best = c;
      best_code = std::move(code);
    }
  }
  return {best, best_code};
}

}  // namespace

std::string tree_canonical_code(const Graph& g) {
  if (!is_tree(g)) throw precondition_error("graph is not a tree");
  return canonical_root(g).second;
}

std::optional<std::vector<int>> tree_isomorphism(const Graph& a, const Graph& b) {
  if (tree_canonical_code(a) != tree_canonical_code(b)) return std::nullopt;
  const auto [root_a, code_a] = canonical_root(a);
  const auto [root_b, code_b] = canonical_root(b);
  std::vector<int> image(a.vertex_count(), -1);
  pair_rooted(adjacency(a), root_a, -1, adjacency(b), root_b, -1, image);
  return image;
}

namespace {

void run_check(VerificationReport& report, const std::string& name,
               const std::function<std::string()>& body) {
  CheckResult r;
  r.name = name;
  try {
    r.details = body();
    r.status = "pass";
    ++report.passed;
  } catch (const budget_error& e) {
    r.status = "skipped";
    r.details = e.what();
    ++report.skipped;
  } catch (const error& e) {
    r.status = "fail";
    r.details = e.what();
    ++report.failed;
  }
  report.checks.push_back(std::move(r));
}

struct check_failure : error {
  using error::error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw check_failure(what);
}

}  // namespace

VerificationReport check_theorems(const Graph& g, int t_max, int mu_max,
                                  const Budget& budget) {
  VerificationReport report;
  {
    std::ostringstream id;
    id << to_graph6(g) << " (n=" << g.vertex_count() << ", m=" << g.edge_count() << ")";
    report.graph_id = id.str();
  }
  const int n = g.vertex_count();
  const BigInt sign_n = (n % 2 == 0) ? 1 : -1;

  IntPolynomial chi;
  run_check(report, "chi-four-way-agreement", [&] {
    chi = chromatic_poly_all_subgraphs(g, budget);
    const IntPolynomial nbc = chromatic_poly_nbc(g, budget);
    const IntPolynomial dc = chromatic_poly_deletion_contraction(g, budget);
    expect(chi == nbc, "all-subgraphs and NBC polynomials differ");
    expect(chi == dc, "all-subgraphs and deletion-contraction polynomials differ");
    for (int t = 1; t <= t_max; ++t)
      expect(chromatic_count(g, t, budget) == evaluate(chi, t),
             "direct count differs at t=" + std::to_string(t));
    return "four routes agree";
  });

  PSymFunc csf;
  run_check(report, "csf-expansions-match", [&] {
    csf = csf_all_subgraphs(g, budget);
    expect(csf == csf_nbc(g, budget), "all-subgraphs and NBC series differ");
    return "both expansions equal";
  });

  run_check(report, "csf-specializes-to-chi", [&] {
    expect(specialize(csf) == chi, "specialization differs from chromatic polynomial");
    return "specialization matches";
  });

  run_check(report, "involution-audit", [&] {
    for (int t = 1; t <= t_max; ++t) {
      const InvolutionAudit audit = audit_involution(g, t, budget);
      expect(audit.passed(), "audit failed at t=" + std::to_string(t) + ": " +
                                 (audit.failures.empty() ? "" : audit.failures.front()));
    }
    return "audited t=1.." + std::to_string(t_max);
  });

  run_check(report, "csf-monomial-oracle", [&] {
    for (int mu = 1; mu <= mu_max; ++mu)
      expect(expand_monomials(csf, mu, budget) == csf_bruteforce(g, mu, budget),
             "monomial expansion differs at mu=" + std::to_string(mu));
    return "matches brute force for mu=1.." + std::to_string(mu_max);
  });

  run_check(report, "reciprocity-at-minus-one", [&] {
    expect(acyclic_orientation_count(g, budget) == sign_n * evaluate(chi, -1),
           "acyclic orientation count mismatch");
    return "acyclic orientations counted by (-1)^n chi(-1)";
  });

  run_check(report, "reciprocity-at-minus-t", [&] {
    for (int t = 1; t <= t_max; ++t)
      expect(compatible_pair_count(g, t, budget) == sign_n * evaluate(chi, -t),
             "compatible pair count mismatch at t=" + std::to_string(t));
    return "compatible pairs counted for t=1.." + std::to_string(t_max);
  });

  run_check(report, "orientation-bijection-round-trip", [&] {
    std::uint64_t count = 0;
    std::set<EdgeSubset> images;
    for (const Orientation& o : acyclic_orientations(g, budget)) {
      const EdgeSubset s = orientation_to_nbc(g, o);
      expect(is_nbc(g, s), "image contains a broken circuit");
      expect(nbc_to_orientation(g, s) == o, "round trip broke an orientation");
      images.insert(s);
      ++count;
    }
    expect(images.size() == count, "bijection is not injective");
    const NbcExpansion nbc = nbc_expansion(g, budget);
    expect(BigInt(count) == BigInt(nbc.subsets_visited),
           "image misses some NBC subsets");
    return "bijective on " + std::to_string(count) + " orientations";
  });

  run_check(report, "colored-bijection-round-trip", [&] {
    for (int t = 1; t <= t_max; ++t) {
      const auto orientations = acyclic_orientations(g, budget);
      for_each_coloring(g, t, budget, [&](const Coloring& k) {
        for (const Orientation& o : orientations) {
          if (!is_compatible(g, o, k)) continue;
          const EdgeSubset s = compatible_to_nbc(g, k, o);
          expect(is_nbc(g, s), "colored image contains a broken circuit");
          expect(is_monochromatic_on(g, s, k), "coloring not monochromatic on image");
          expect(nbc_to_compatible(g, k, s) == o, "colored round trip broke");
        }
      });
    }
    return "round trips hold for t=1.." + std::to_string(t_max);
  });

  run_check(report, "omega-reciprocity-monomials", [&] {
    const PSymFunc flipped = omega(csf);
    for (int mu = 1; mu <= mu_max; ++mu)
      expect(compatible_pair_generating(g, mu, budget) ==
                 expand_monomials(flipped, mu, budget),
             "omega reciprocity fails at mu=" + std::to_string(mu));
    return "weight generating functions match for mu=1.." + std::to_string(mu_max);
  });

  run_check(report, "nbc-coefficients", [&] {
    const std::vector<BigInt> a = nbc_coefficients(g, budget);
    IntPolynomial rebuilt;
    for (int k = 0; k <= n; ++k) {
      const BigInt c = (k % 2 == 0) ? a[k] : -a[k];
      rebuilt += IntPolynomial::monomial(c, n - k);
    }
    expect(rebuilt == chi, "alternating reconstruction differs");
    expect(a[0] == 1, "a_0 is not 1");
    if (n >= 1)
      expect(a.size() < 2 || a[1] == g.edge_count(), "a_1 is not the edge count");
    expect(is_log_concave(a), "coefficient sequence is not log-concave");
    return "reconstruction and log-concavity hold";
  });

  run_check(report, "tree-formula", [&] {
    if (!is_tree(g)) return std::string("not a tree; vacuous");
    expect(chi == tree_chromatic_polynomial(n), "tree chromatic formula fails");
    return std::string("t(t-1)^(n-1) confirmed");
  });

  return report;
}

TreeSweepReport tree_conjecture_sweep(int n, const Budget& budget) {
  TreeSweepReport report;
  report.n = n;
  std::map<std::string, Graph> representatives;
  for_each_tree(n, [&](const Graph& t) {
    ++report.labeled_trees;
    representatives.try_emplace(tree_canonical_code(t), t);
  }, budget);
  report.iso_classes = representatives.size();

  std::map<std::string, std::string> csf_to_code;  // serialized CSF -> code
  for (const auto& [code, tree] : representatives) {
    const PSymFunc x = csf_nbc(tree, budget);
    if (specialize(x) != tree_chromatic_polynomial(n)) report.chi_formula_ok = false;
    std::ostringstream key;
    for (const auto& [lambda, c] : x.terms()) {
      key << c << ":";
      for (int p : lambda.parts()) key << p << ",";
      key << ";";
    }
    const auto [it, inserted] = csf_to_code.try_emplace(key.str(), code);
    if (!inserted) report.collisions.emplace_back(it->second, code);
  }
  return report;
}

}  // namespace chromabij
