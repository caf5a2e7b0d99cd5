#include <doctest.h>

#include <random>
#include <set>

#include "chromabij/chromatic.hpp"
#include "chromabij/errors.hpp"
#include "chromabij/symfunc.hpp"
#include "chromabij/verify.hpp"

using namespace chromabij;

TEST_CASE("graph enumeration") {
  CHECK(enumerate_graphs(2).size() == 2);
  CHECK(enumerate_graphs(3).size() == 8);
  CHECK(enumerate_graphs(4).size() == 64);
  CHECK_THROWS_AS(enumerate_graphs(8), budget_error);
}

TEST_CASE("tree enumeration") {
  CHECK(enumerate_trees(1).size() == 1);
  CHECK(enumerate_trees(2).size() == 1);
  CHECK(enumerate_trees(3).size() == 3);
  CHECK(enumerate_trees(4).size() == 16);
  for (const Graph& t : enumerate_trees(5)) CHECK(is_tree(t));
  CHECK_THROWS_AS(enumerate_trees(10), budget_error);
}

TEST_CASE("named fixtures") {
  const Graph butterfly = named_graph("butterfly");
  CHECK(butterfly.vertex_count() == 5);
  CHECK(butterfly.edge_count() == 6);
  CHECK(degree_sequence(butterfly) == std::vector<int>{2, 2, 2, 2, 4});

  const Graph kite = named_graph("kite");
  CHECK(kite.vertex_count() == 5);
  CHECK(kite.edge_count() == 6);

  const Graph net = named_graph("net");
  CHECK(net.vertex_count() == 6);
  CHECK(net.edge_count() == 6);
  CHECK(degree_sequence(net) == std::vector<int>{1, 1, 1, 3, 3, 3});

  const Graph x169 = named_graph("x169");
  CHECK(x169.vertex_count() == 6);
  CHECK(x169.edge_count() == 6);

  const Graph fig1 = named_graph("fig1");
  CHECK(chromatic_poly_all_subgraphs(fig1).coefficients() ==
        std::vector<BigInt>{0, -2, 5, -4, 1});

  CHECK_THROWS_AS(named_graph("petersen"), invalid_input_error);
}

TEST_CASE("the paper's csf collisions, on non-isomorphic graphs") {
  const Graph butterfly = named_graph("butterfly");
  const Graph kite = named_graph("kite");
  CHECK(csf_nbc(butterfly) == csf_nbc(kite));
  CHECK(degree_sequence(butterfly) != degree_sequence(kite));

  const Graph net = named_graph("net");
  const Graph x169 = named_graph("x169");
  CHECK(csf_nbc(net) == csf_nbc(x169));
  CHECK(degree_sequence(net) != degree_sequence(x169));
}

TEST_CASE("the identity battery passes on the running example") {
  const VerificationReport report = check_theorems(named_graph("fig1"), 3, 3);
  CHECK(report.all_passed());
  CHECK(report.failed == 0);
  CHECK(report.skipped == 0);
  CHECK(report.checks.size() == 12);
  // Each configured check appears exactly once.
  std::set<std::string> names;
  for (const CheckResult& c : report.checks) CHECK(names.insert(c.name).second);
}

TEST_CASE("the identity battery passes on the fixtures") {
  for (const std::string& name : named_graph_names()) {
    const VerificationReport report = check_theorems(named_graph(name), 2, 2);
    CHECK(report.all_passed());
  }
}

TEST_CASE("the identity battery passes on every graph with up to 4 vertices") {
  for (int n = 1; n <= 4; ++n) {
    for_each_graph(n, [&](const Graph& g) {
      CHECK(check_theorems(g, 2, 2).all_passed());
    });
  }
}

TEST_CASE("budget-starved checks are reported as skipped") {
  Budget tiny;
  tiny.max_colorings = 2;
  tiny.max_subsets = 2;
  tiny.max_terms = 2;
  const VerificationReport report = check_theorems(named_graph("fig1"), 3, 3, tiny);
  CHECK(report.failed == 0);
  CHECK(report.skipped > 0);
}

TEST_CASE("tree canonical codes separate non-isomorphic trees") {
  const Graph path4(4, {{0, 1}, {1, 2}, {2, 3}});
  const Graph star4(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(tree_canonical_code(path4) != tree_canonical_code(star4));

  const Graph path4_relabeled(4, {{2, 0}, {0, 3}, {3, 1}});
  CHECK(tree_canonical_code(path4) == tree_canonical_code(path4_relabeled));
  CHECK_THROWS_AS(tree_canonical_code(Graph(3, {})), precondition_error);
}

TEST_CASE("equal codes come with an explicit isomorphism") {
  std::mt19937 rng(58123);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + int(rng() % 7);
    // A random labeled tree and a random relabeling of it.
    Graph t1(1, {});
    {
      auto trees = enumerate_trees(n);
      t1 = trees[rng() % trees.size()];
    }
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
    std::vector<Edge> edges;
    for (const Edge& e : t1.edges())
      edges.push_back(perm[e.u] < perm[e.v] ? Edge{perm[e.u], perm[e.v]}
                                            : Edge{perm[e.v], perm[e.u]});
    const Graph t2 = Graph::from_edge_set(n, std::move(edges));

    const auto iso = tree_isomorphism(t1, t2);
    REQUIRE(iso.has_value());
    // The mapping must send edges to edges.
    for (const Edge& e : t1.edges())
      CHECK(t2.edge_index((*iso)[e.u], (*iso)[e.v]) >= 0);
  }

  const auto none =
      tree_isomorphism(Graph(4, {{0, 1}, {1, 2}, {2, 3}}), Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  CHECK(!none.has_value());
}

TEST_CASE("tree sweep groups isomorphism classes and finds no collision") {
  const TreeSweepReport r4 = tree_conjecture_sweep(4);
  CHECK(r4.labeled_trees == 16);
  CHECK(r4.iso_classes == 2);  // the path and the star
  CHECK(r4.collisions.empty());
  CHECK(r4.chi_formula_ok);

  const TreeSweepReport r6 = tree_conjecture_sweep(6);
  CHECK(r6.labeled_trees == 1296);
  CHECK(r6.iso_classes == 6);
  CHECK(r6.collisions.empty());
}
