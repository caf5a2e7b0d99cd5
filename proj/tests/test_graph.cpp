#include <doctest.h>

#include <random>

#include "chromabij/errors.hpp"
#include "chromabij/graph.hpp"
#include "chromabij/verify.hpp"
#include "oracles.hpp"

using namespace chromabij;

namespace {

// Vertices u=0, v=1, w=2, x=3; edges e1=uw, e2=uv, e3=vw, e4=vx.
Graph fig1() { return Graph(4, {{0, 2}, {0, 1}, {1, 2}, {1, 3}}); }

Graph triangle() { return Graph(3, {{0, 1}, {0, 2}, {1, 2}}); }

}  // namespace

TEST_CASE("graph construction validates input") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), invalid_input_error);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), invalid_input_error);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), invalid_input_error);
  CHECK_THROWS_AS(Graph(3, {{-1, 1}}), invalid_input_error);

  const Graph g(3, {{2, 0}, {1, 0}});
  CHECK(g.edge(0) == Edge{0, 2});  // endpoints normalized, order kept
  CHECK(g.edge(1) == Edge{0, 1});
  CHECK(g.edge_index(1, 0) == 1);
  CHECK(g.edge_index(1, 2) == -1);
}

TEST_CASE("from_edge_set orders edges lexicographically") {
  const Graph g = Graph::from_edge_set(4, {{2, 3}, {0, 3}, {1, 0}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {2, 3}});
}

TEST_CASE("edge subsets are sorted sets") {
  const EdgeSubset s({3, 1});
  CHECK(s.indices() == std::vector<int>{1, 3});
  CHECK(s.contains(3));
  CHECK(!s.contains(0));
  CHECK(s.toggled(1).indices() == std::vector<int>{3});
  CHECK(s.toggled(0).indices() == std::vector<int>{0, 1, 3});
  CHECK_THROWS_AS(EdgeSubset({1, 1}), invalid_input_error);
  CHECK_THROWS_AS(EdgeSubset({-1}), invalid_input_error);
  CHECK(EdgeSubset::from_mask(0b1010).indices() == std::vector<int>{1, 3});
}

TEST_CASE("components of the running example") {
  const Graph g = fig1();
  const VertexPartition p = components(g, EdgeSubset({1, 2}));
  REQUIRE(p.blocks.size() == 2);
  CHECK(p.blocks[0] == std::vector<int>{0, 1, 2});
  CHECK(p.blocks[1] == std::vector<int>{3});
  CHECK(component_count(g, EdgeSubset({1, 2})) == 2);

  CHECK(components(g, EdgeSubset()).blocks.size() == 4);

  const Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(components(path, EdgeSubset({0, 1, 2})).blocks.size() == 1);
  CHECK(components(path, EdgeSubset({0, 1, 2})).blocks[0].size() == 4);

  CHECK_THROWS_AS(components(g, EdgeSubset({4})), invalid_input_error);
}

TEST_CASE("component partitions") {
  const Graph g = fig1();
  CHECK(component_partition(g, EdgeSubset({1, 2})).parts() == std::vector<int>{3, 1});
  CHECK(component_partition(g, EdgeSubset()).parts() == std::vector<int>{1, 1, 1, 1});
  CHECK(component_partition(triangle(), EdgeSubset({0})).parts() ==
        std::vector<int>{2, 1});
}

TEST_CASE("forest test on the running example") {
  const Graph g = fig1();
  CHECK(!is_forest(g, EdgeSubset({0, 1, 2})));
  CHECK(is_forest(g, EdgeSubset()));
  CHECK(is_forest(g, EdgeSubset({1, 3})));
}

TEST_CASE("forests are exactly the subsets with c(S) = n - |S|") {
  for (int n = 1; n <= 5; ++n) {
    for_each_graph(n, [&](const Graph& g) {
      for (const EdgeSubset& s : oracles::all_subsets(g)) {
        const bool forest = is_forest(g, s);
        CHECK(forest == (component_count(g, s) == n - s.size()));
        if (forest) CHECK(component_count(g, s) == n - s.size());
      }
    });
  }
}

TEST_CASE("NBC test on the running example") {
  const Graph g = fig1();
  CHECK(!is_nbc(g, EdgeSubset({0, 1})));  // the broken circuit {e1,e2}
  CHECK(is_nbc(g, EdgeSubset()));
  CHECK(is_nbc(g, EdgeSubset({1, 3})));
}

TEST_CASE("NBC sweep test agrees with the definitional broken-circuit test") {
  for (int n = 1; n <= 5; ++n) {
    for_each_graph(n, [&](const Graph& g) {
      for (const EdgeSubset& s : oracles::all_subsets(g)) {
        const bool fast = is_nbc(g, s);
        CHECK(fast == !oracles::contains_broken_circuit(g, s));
        if (fast) CHECK(is_forest(g, s));  // NBC subsets are forests
      }
    });
  }
}

TEST_CASE("broken circuits of small fixtures") {
  const auto bc = broken_circuits(fig1());
  REQUIRE(bc.size() == 1);
  CHECK(bc[0].indices() == std::vector<int>{0, 1});

  const auto bc3 = broken_circuits(triangle());
  REQUIRE(bc3.size() == 1);
  CHECK(bc3[0].indices() == std::vector<int>{0, 1});

  const Graph forest(5, {{0, 1}, {1, 2}, {3, 4}});
  CHECK(broken_circuits(forest).empty());

  // K4 has seven cycles; count the distinct broken circuits directly.
  const Graph k4 = Graph::from_edge_set(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto bc4 = broken_circuits(k4);
  for (const EdgeSubset& b : bc4) CHECK(!is_nbc(k4, b));
  CHECK(bc4.size() >= 4);
}

TEST_CASE("mixed graph invariants") {
  CHECK_THROWS_AS(MixedGraph(2, {{0, 1}}, {{0, 1}}), invalid_input_error);
  CHECK_THROWS_AS(MixedGraph(2, {{0, 1}}, {{1, 0}}), invalid_input_error);
  CHECK_THROWS_AS(MixedGraph(2, {}, {{0, 1}, {1, 0}}), invalid_input_error);
  CHECK_THROWS_AS(MixedGraph(2, {}, {{0, 0}}), invalid_input_error);
  const MixedGraph m(3, {{0, 1}}, {{1, 2}});
  CHECK(m.has_edge(1, 0));
  CHECK(m.has_arc(1, 2));
  CHECK(!m.has_arc(2, 1));
}

TEST_CASE("acyclicity of mixed graphs") {
  // The acyclic orientation from the compatibility example: arcs w->v,
  // w->u, v->u, v->x with u=0, v=1, w=2, x=3.
  CHECK(mixed_is_acyclic(MixedGraph(4, {}, {{2, 1}, {2, 0}, {1, 0}, {1, 3}})));
  // Edge forests are acyclic.
  CHECK(mixed_is_acyclic(MixedGraph(5, {{0, 1}, {1, 2}, {3, 4}}, {})));
  // Directed triangle.
  CHECK(!mixed_is_acyclic(MixedGraph(3, {}, {{0, 1}, {1, 2}, {2, 0}})));
  // An arc bridging an undirected path back to its start.
  CHECK(!mixed_is_acyclic(MixedGraph(3, {{0, 1}, {1, 2}}, {{2, 0}})));
  CHECK(!mixed_is_acyclic(MixedGraph(3, {{0, 1}, {1, 2}}, {{0, 2}})));
}

TEST_CASE("acyclicity decision matches exhaustive cycle search on n <= 4") {
  // Every valid mixed graph on 4 vertices: each pair is absent, an edge,
  // or one of the two arcs.
  std::vector<Edge> pairs;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) pairs.push_back({u, v});
  std::vector<int> state(pairs.size(), 0);
  for (;;) {
    std::vector<Edge> edges;
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      switch (state[i]) {
        case 1: edges.push_back(pairs[i]); break;
        case 2: arcs.push_back({pairs[i].u, pairs[i].v}); break;
        case 3: arcs.push_back({pairs[i].v, pairs[i].u}); break;
        default: break;
      }
    }
    const MixedGraph m(4, edges, arcs);
    CHECK(mixed_is_acyclic(m) == !oracles::mixed_has_cycle(m));

    std::size_t pos = 0;
    while (pos < state.size() && state[pos] == 3) state[pos++] = 0;
    if (pos == state.size()) break;
    ++state[pos];
  }
}

TEST_CASE("cycle extraction") {
  const MixedGraph tri(3, {}, {{0, 1}, {1, 2}, {2, 0}});
  Walk once{0, {{true, 0, 1}, {true, 1, 2}, {true, 2, 0}}};

  SUBCASE("a cycle is its own extraction") {
    const Walk c = extract_cycle(tri, once);
    CHECK(c.start == 0);
    CHECK(c.steps == once.steps);
  }

  SUBCASE("a doubled closed walk shortens to one loop") {
    Walk twice = once;
    twice.steps.insert(twice.steps.end(), once.steps.begin(), once.steps.end());
    const Walk c = extract_cycle(tri, twice);
    CHECK(oracles::is_valid_cycle(tri, c));
    CHECK(c.steps.size() == 3);
  }

  SUBCASE("figure-eight walk keeps an arc-bearing loop") {
    // Two loops sharing vertex 0: an undirected triangle and a directed one.
    const MixedGraph m(5, {{0, 1}, {1, 2}, {0, 2}}, {{0, 3}, {3, 4}, {4, 0}});
    Walk w{0,
           {{false, 0, 1}, {false, 1, 2}, {false, 2, 0},
            {true, 0, 3}, {true, 3, 4}, {true, 4, 0}}};
    const Walk c = extract_cycle(m, w);
    CHECK(oracles::is_valid_cycle(m, c));
    CHECK(c.traverses_arc());
  }

  SUBCASE("preconditions") {
    CHECK_THROWS_AS(extract_cycle(tri, Walk{0, {{true, 0, 1}}}), precondition_error);
    const MixedGraph path(3, {{0, 1}, {1, 2}}, {});
    CHECK_THROWS_AS(
        extract_cycle(path, Walk{0, {{false, 0, 1}, {false, 1, 0}}}),
        precondition_error);  // closed but traverses no arc
    CHECK_THROWS_AS(extract_cycle(tri, Walk{0, {{true, 1, 2}}}), precondition_error);
  }
}

TEST_CASE("cycle extraction on random closed walks") {
  std::mt19937 rng(421133);
  int extracted = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);  // 3..6 vertices
    std::vector<Edge> edges;
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        switch (rng() % 4) {
          case 1: edges.push_back({u, v}); break;
          case 2: arcs.push_back({u, v}); break;
          case 3: arcs.push_back({v, u}); break;
          default: break;
        }
      }
    const MixedGraph m(n, edges, arcs);

    // Random walk; keep it if it closes up having traversed an arc.
    Walk w;
    w.start = static_cast<int>(rng() % n);
    int at = w.start;
    bool used_arc = false;
    const int length = 2 + static_cast<int>(rng() % 10);
    for (int step = 0; step < length; ++step) {
      std::vector<WalkStep> moves;
      for (const Edge& e : m.edges()) {
        if (e.u == at) moves.push_back({false, e.u, e.v});
        if (e.v == at) moves.push_back({false, e.v, e.u});
      }
      for (const Arc& a : m.arcs())
        if (a.from == at) moves.push_back({true, a.from, a.to});
      if (moves.empty()) break;
      const WalkStep chosen = moves[rng() % moves.size()];
      w.steps.push_back(chosen);
      used_arc = used_arc || chosen.via_arc;
      at = chosen.to;
    }
    if (!used_arc || w.steps.empty() || at != w.start) continue;

    const Walk c = extract_cycle(m, w);
    CHECK(oracles::is_valid_cycle(m, c));
    CHECK(c.traverses_arc());
    ++extracted;
  }
  CHECK(extracted > 100);  // the generator actually produced closed walks
}
