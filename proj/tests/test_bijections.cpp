#include <doctest.h>

#include <set>

#include "chromabij/bijections.hpp"
#include "chromabij/chromatic.hpp"
#include "chromabij/errors.hpp"
#include "chromabij/verify.hpp"
#include "oracles.hpp"

using namespace chromabij;

namespace {

Graph fig1() { return Graph(4, {{0, 2}, {0, 1}, {1, 2}, {1, 3}}); }
Graph k2() { return Graph(2, {{0, 1}}); }

Orientation bits(std::vector<bool> v) { return Orientation{std::move(v)}; }

// All members of the intermediate family at the given stage: NBC subsets of
// the first `stage` edges as edges, arbitrary orientations of the rest,
// filtered to acyclic mixed graphs.
std::vector<StagedMixed> stage_family(const Graph& g, int stage) {
  std::vector<StagedMixed> out;
  const int m = g.edge_count();
  for (std::uint64_t emask = 0; emask < (std::uint64_t{1} << stage); ++emask) {
    const EdgeSubset subset = EdgeSubset::from_mask(emask);
    if (!is_nbc(g, subset)) continue;
    std::vector<Edge> edges;
    for (int i : subset.indices()) edges.push_back(g.edge(i));
    for (std::uint64_t amask = 0; amask < (std::uint64_t{1} << (m - stage)); ++amask) {
      std::vector<Arc> arcs;
      for (int i = stage; i < m; ++i) {
        const Edge& e = g.edge(i);
        arcs.push_back(((amask >> (i - stage)) & 1) ? Arc{e.u, e.v} : Arc{e.v, e.u});
      }
      MixedGraph mixed(g.vertex_count(), edges, arcs);
      if (!mixed_is_acyclic(mixed)) continue;
      out.push_back(StagedMixed{&g, stage, std::move(mixed)});
    }
  }
  return out;
}

}  // namespace

TEST_CASE("normal arcs run from the lower to the higher endpoint") {
  const Graph g(4, {{0, 1}, {3, 1}});
  CHECK(normal_arc(g, 0) == Arc{0, 1});
  CHECK(normal_arc(g, 1) == Arc{1, 3});
  CHECK(arc_of(g, bits({false, true}), 0) == Arc{1, 0});
}

TEST_CASE("stage constructors enforce their domains") {
  const Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  // 0->1->2 plus 2->0 is a directed cycle.
  CHECK_THROWS_AS(stage_from_orientation(tri, bits({true, true, false})),
                  precondition_error);
  CHECK_NOTHROW(stage_from_orientation(tri, bits({true, true, true})));
  CHECK_THROWS_AS(stage_from_subset(fig1(), EdgeSubset({0, 1})), precondition_error);
  CHECK_NOTHROW(stage_from_subset(fig1(), EdgeSubset({1, 3})));
}

TEST_CASE("single-edge graph resolves by rule evaluation") {
  const Graph g = k2();
  CHECK(orientation_to_nbc(g, bits({true})) == EdgeSubset({0}));
  CHECK(orientation_to_nbc(g, bits({false})) == EdgeSubset());
  // The empty subset goes back to the abnormal orientation: the edge is
  // absent and the abnormal arc alone is acyclic.
  CHECK(nbc_to_orientation(g, EdgeSubset()) == bits({false}));
  CHECK(nbc_to_orientation(g, EdgeSubset({0})) == bits({true}));
}

TEST_CASE("trace of the all-normal orientation of the running example") {
  const auto trace = trace_orientation_to_nbc(fig1(), bits({true, true, true, true}));
  REQUIRE(trace.size() == 5);
  // Unorienting e1 would close a cycle with the arcs over e2 and e3.
  CHECK(trace[1].info.action == "removed");
  CHECK(trace[1].info.violated_rule == "B");
  CHECK(trace[2].info.action == "unoriented");
  CHECK(trace[3].info.action == "unoriented");
  CHECK(trace[4].info.action == "unoriented");
  CHECK(orientation_to_nbc(fig1(), bits({true, true, true, true})) ==
        EdgeSubset({1, 2, 3}));
}

TEST_CASE("backward step on a present edge orients it normally") {
  const Graph g = fig1();
  StagedMixed s = stage_from_subset(g, EdgeSubset({1, 3}));
  StepInfo info;
  s = backward_step(s, 4, &info);
  CHECK(info.action == "oriented-normal");
  CHECK(info.violated_rule == "A'");
  CHECK(s.mixed.has_arc(1, 3));
}

TEST_CASE("step maps are mutually inverse on every stage family") {
  int families = 0;
  for (int n = 1; n <= 4; ++n) {
    for_each_graph(n, [&](const Graph& g) {
      if (g.edge_count() > 5) return;
      for (int i = 1; i <= g.edge_count(); ++i) {
        for (const StagedMixed& s : stage_family(g, i - 1)) {
          const StagedMixed forward = forward_step(s, i);
          CHECK(forward.stage == i);
          CHECK_NOTHROW(validate_stage(forward));
          CHECK(backward_step(forward, i) == s);
        }
        for (const StagedMixed& s : stage_family(g, i)) {
          const StagedMixed backward = backward_step(s, i);
          CHECK(backward.stage == i - 1);
          CHECK_NOTHROW(validate_stage(backward));
          CHECK(forward_step(backward, i) == s);
        }
        ++families;
      }
    });
  }
  CHECK(families > 100);
}

TEST_CASE("orientation-to-NBC is a bijection on small graphs") {
  for (int n = 1; n <= 4; ++n) {
    for_each_graph(n, [&](const Graph& g) {
      std::set<EdgeSubset> nbc_sets;
      for (const EdgeSubset& s : oracles::all_subsets(g))
        if (is_nbc(g, s)) nbc_sets.insert(s);

      std::set<EdgeSubset> images;
      for (const Orientation& o : acyclic_orientations(g)) {
        const EdgeSubset s = orientation_to_nbc(g, o);
        CHECK(nbc_sets.count(s) == 1);
        images.insert(s);
        CHECK(nbc_to_orientation(g, s) == o);
      }
      CHECK(images == nbc_sets);

      for (const EdgeSubset& s : nbc_sets)
        CHECK(orientation_to_nbc(g, nbc_to_orientation(g, s)) == s);
    });
  }
}

TEST_CASE("colored bijection degenerate cases") {
  const Graph g = fig1();
  // All colors distinct: every class subgraph is edgeless.
  const Coloring injective{{2, 1, 3, 4}};
  const Orientation o = nbc_to_compatible(g, injective, EdgeSubset());
  CHECK(is_compatible(g, o, injective));
  // Arcs point toward the larger color: e1=uw 2<3 normal, e2=uv 2>1
  // abnormal, e3=vw 1<3 normal, e4=vx 1<4 normal.
  CHECK(o == bits({true, false, true, true}));
  CHECK(compatible_to_nbc(g, injective, o) == EdgeSubset());

  // Constant coloring: the colored map degenerates to the plain one.
  const Coloring constant{{1, 1, 1, 1}};
  for (const Orientation& ao : acyclic_orientations(g)) {
    CHECK(compatible_to_nbc(g, constant, ao) == orientation_to_nbc(g, ao));
  }
}

TEST_CASE("colored bijection preconditions") {
  const Graph g = k2();
  CHECK_THROWS_AS(compatible_to_nbc(g, Coloring{{2, 1}}, bits({true})),
                  precondition_error);
  CHECK_THROWS_AS(nbc_to_compatible(g, Coloring{{1, 2}}, EdgeSubset({0})),
                  precondition_error);  // not monochromatic on the subset
  CHECK_THROWS_AS(nbc_to_compatible(fig1(), Coloring{{1, 1, 1, 1}}, EdgeSubset({0, 1})),
                  precondition_error);  // broken circuit
}

TEST_CASE("colored bijection round trips exhaustively") {
  for (int n = 1; n <= 3; ++n) {
    for_each_graph(n, [&](const Graph& g) {
      const auto orientations = acyclic_orientations(g);
      for (int t = 1; t <= 3; ++t) {
        for_each_coloring(g, t, Budget{}, [&](const Coloring& k) {
          std::set<EdgeSubset> targets;
          for (const EdgeSubset& s : oracles::all_subsets(g))
            if (is_nbc(g, s) && is_monochromatic_on(g, s, k)) targets.insert(s);

          std::set<EdgeSubset> images;
          std::uint64_t compatible = 0;
          for (const Orientation& o : orientations) {
            if (!is_compatible(g, o, k)) continue;
            ++compatible;
            const EdgeSubset s = compatible_to_nbc(g, k, o);
            CHECK(targets.count(s) == 1);
            images.insert(s);
            CHECK(nbc_to_compatible(g, k, s) == o);
          }
          CHECK(images == targets);
          CHECK(compatible == targets.size());
        });
      }
    });
  }
}

TEST_CASE("class counts add up to the compatible pair count") {
  const Graph g = fig1();
  for (int t = 1; t <= 3; ++t) {
    BigInt total = 0;
    const auto orientations = acyclic_orientations(g);
    for_each_coloring(g, t, Budget{}, [&](const Coloring& k) {
      for (const Orientation& o : orientations)
        if (is_compatible(g, o, k)) ++total;
    });
    CHECK(total == compatible_pair_count(g, t));
  }
}
