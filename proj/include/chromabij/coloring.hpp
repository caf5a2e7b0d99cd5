#pragma once

#include <vector>

#include "chromabij/bigint.hpp"
#include "chromabij/budget.hpp"
#include "chromabij/errors.hpp"
#include "chromabij/graph.hpp"

namespace chromabij {

/// Vertex coloring: one positive integer per vertex. Colors are unbounded,
/// so the same type serves [t]-colorings and P-colorings.
struct Coloring {
  std::vector<int> colors;

  int color(int v) const { return colors[v]; }

  friend bool operator==(const Coloring& a, const Coloring& b) {
    return a.colors == b.colors;
  }
  friend bool operator!=(const Coloring& a, const Coloring& b) {
    return !(a == b);
  }
};

/// Throws invalid_input_error unless k has one color >= 1 per vertex of g.
void validate_coloring(const Graph& g, const Coloring& k);

/// True iff no edge of g joins two vertices of the same color.
bool is_proper(const Graph& g, const Coloring& k);

/// True iff every edge of s is monochromatic under k; equivalently k is
/// constant on every component of the spanning subgraph (V, s).
bool is_monochromatic_on(const Graph& g, const EdgeSubset& s, const Coloring& k);

/// t^(c(S)): the number of [t]-colorings monochromatic on the components
/// of s.
BigInt count_monochromatic_colorings(const Graph& g, const EdgeSubset& s, int t);

/// True iff every arc of o points toward a weakly larger color.
bool is_compatible(const Graph& g, const Orientation& o, const Coloring& k);

/// Number of [t]-colorings (t^n) if it fits the budget, else throws.
std::uint64_t checked_coloring_count(const Graph& g, int t, const Budget& budget);

/// Calls fn for each of the t^n colorings of g in lexicographic order.
template <typename F>
void for_each_coloring(const Graph& g, int t, const Budget& budget, F&& fn) {
  checked_coloring_count(g, t, budget);
  const int n = g.vertex_count();
  Coloring k;
  k.colors.assign(n, 1);
  for (;;) {
    fn(static_cast<const Coloring&>(k));
    int pos = n - 1;
    while (pos >= 0 && k.colors[pos] == t) k.colors[pos--] = 1;
    if (pos < 0) break;
    ++k.colors[pos];
  }
}

/// Materialized variant of for_each_coloring, for small cases.
std::vector<Coloring> enumerate_colorings(const Graph& g, int t,
                                          const Budget& budget = Budget{});

}  // namespace chromabij
