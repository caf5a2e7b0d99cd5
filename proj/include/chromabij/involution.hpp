#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chromabij/bigint.hpp"
#include "chromabij/budget.hpp"
#include "chromabij/coloring.hpp"
#include "chromabij/graph.hpp"

namespace chromabij {

/// A spanning subgraph together with a coloring that is monochromatic on
/// its components. These pairs carry sign (-1)^|S| and weight x^k; the
/// signed sum over all of them collapses onto the proper colorings.
struct ColoredSubgraph {
  EdgeSubset subset;
  Coloring coloring;

  friend bool operator==(const ColoredSubgraph& a, const ColoredSubgraph& b) {
    return a.subset == b.subset && a.coloring == b.coloring;
  }
  friend bool operator!=(const ColoredSubgraph& a, const ColoredSubgraph& b) {
    return !(a == b);
  }
};

/// Throws precondition_error unless p's coloring is monochromatic on the
/// components of p's subset.
void require_member(const Graph& g, const ColoredSubgraph& p);

/// (-1)^|subset|.
int sign_of(const ColoredSubgraph& p);

/// The maximal edge index whose endpoints share a color; absent iff the
/// coloring is proper.
std::optional<int> last_monochromatic_edge(const Graph& g, const Coloring& k);

/// The sign-reversing involution: proper colorings are fixed; otherwise the
/// last monochromatic edge is toggled in the subset. The coloring never
/// changes, so the weight x^k is preserved.
ColoredSubgraph involute(const Graph& g, const ColoredSubgraph& p);

/// Exhaustive audit of the involution over all pairs with colors in [t].
struct InvolutionAudit {
  std::uint64_t pair_count = 0;   ///< |S|: pairs enumerated
  std::uint64_t fixed_count = 0;  ///< fixed points of the involution
  BigInt signed_sum = 0;          ///< sum of signs over all pairs
  BigInt proper_count = 0;        ///< proper [t]-colorings, counted directly
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// Checks, pair by pair: the map is an involution into the same set, flips
/// the sign exactly off its fixed points, never touches the coloring, has
/// fixed points exactly (empty set, proper coloring), and restricted to
/// pairs whose subset contains a broken circuit it is fixed-point-free and
/// keeps every such broken circuit contained. Also checks that the number
/// of fixed points equals the proper-coloring count.
InvolutionAudit audit_involution(const Graph& g, int t, const Budget& budget = Budget{});

}  // namespace chromabij
