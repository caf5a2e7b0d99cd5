#include "chromabij/coloring.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace chromabij {

void validate_coloring(const Graph& g, const Coloring& k) {
  if (k.colors.size() != static_cast<std::size_t>(g.vertex_count()))
    throw invalid_input_error("coloring length does not match vertex count");
  for (int c : k.colors)
    if (c < 1) throw invalid_input_error("colors are positive integers");
}

bool is_proper(const Graph& g, const Coloring& k) {
  validate_coloring(g, k);
  for (const Edge& e : g.edges())
    if (k.colors[e.u] == k.colors[e.v]) return false;
  return true;
}

bool is_monochromatic_on(const Graph& g, const EdgeSubset& s, const Coloring& k) {
  validate_coloring(g, k);
  for (int i : s.indices()) {
    const Edge& e = g.edge(i);
    if (k.colors[e.u] != k.colors[e.v]) return false;
  }
  return true;
}

BigInt count_monochromatic_colorings(const Graph& g, const EdgeSubset& s, int t) {
  if (t < 1) throw invalid_input_error("t must be a positive integer");
  return boost::multiprecision::pow(BigInt(t), component_count(g, s));
}

bool is_compatible(const Graph& g, const Orientation& o, const Coloring& k) {
  validate_coloring(g, k);
  if (o.normal.size() != static_cast<std::size_t>(g.edge_count()))
    throw invalid_input_error("orientation size does not match edge count");
  for (int i = 0; i < g.edge_count(); ++i) {
    const Arc a = arc_of(g, o, i);
    if (k.colors[a.from] > k.colors[a.to]) return false;
  }
  return true;
}

std::uint64_t checked_coloring_count(const Graph& g, int t, const Budget& budget) {
  if (t < 1) throw invalid_input_error("t must be a positive integer");
  const BigInt total = boost::multiprecision::pow(BigInt(t), g.vertex_count());
  if (total > budget.max_colorings)
    throw budget_error("coloring enumeration exceeds budget");
  return total.convert_to<std::uint64_t>();
}

std::vector<Coloring> enumerate_colorings(const Graph& g, int t, const Budget& budget) {
  std::vector<Coloring> out;
  for_each_coloring(g, t, budget, [&](const Coloring& k) { out.push_back(k); });
  return out;
}

}  // namespace chromabij
