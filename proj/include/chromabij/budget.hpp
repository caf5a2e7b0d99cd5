#pragma once

#include <cstdint>

namespace chromabij {

/// Enumeration limits for the brute-force and subset-expansion routines.
/// Everything here is desk scale by design; exceeding a limit raises
/// budget_error instead of grinding away.
struct Budget {
  std::uint64_t max_colorings = 10'000'000;            ///< colorings enumerated
  std::uint64_t max_subsets = std::uint64_t{1} << 24;  ///< subsets / orientations
  std::uint64_t max_terms = std::uint64_t{1} << 24;    ///< monomial expansion size
  int graph_enum_cap = 7;  ///< largest n accepted by enumerate_graphs
  int tree_enum_cap = 9;   ///< largest n accepted by enumerate_trees

  /// Reads CHROMABIJ_BUDGET; a positive integer value overrides the three
  /// enumeration limits. The n-caps stay fixed.
  static Budget from_env();
};

}  // namespace chromabij
