#pragma once

#include <cstdint>
#include <vector>

#include "chromabij/bigint.hpp"
#include "chromabij/budget.hpp"
#include "chromabij/graph.hpp"
#include "chromabij/polynomial.hpp"

namespace chromabij {

/// Exact number of proper [t]-colorings, by filtering the full enumeration.
BigInt chromatic_count(const Graph& g, int t, const Budget& budget = Budget{});

/// Chromatic polynomial as the signed sum over all 2^m spanning subgraphs:
/// sum over S of (-1)^|S| t^c(S).
IntPolynomial chromatic_poly_all_subgraphs(const Graph& g,
                                           const Budget& budget = Budget{});

/// Result of the pruned expansion over broken-circuit-free subgraphs.
struct NbcExpansion {
  IntPolynomial poly;
  /// a_k = number of NBC spanning subgraphs with k edges, k = 0..n.
  std::vector<BigInt> coefficients;
  /// NBC subsets enumerated (the terms of the sum). The full expansion
  /// would visit 2^m; this count is strictly smaller unless g is a forest.
  std::uint64_t subsets_visited = 0;
};

/// Backtracks over edges in increasing order, extending forests and pruning
/// any branch whose chosen earlier edges already connect the endpoints of
/// the edge under consideration; exactly the NBC subsets reach the leaves.
NbcExpansion nbc_expansion(const Graph& g, const Budget& budget = Budget{});

/// Chromatic polynomial via the NBC expansion only.
IntPolynomial chromatic_poly_nbc(const Graph& g, const Budget& budget = Budget{});

/// Independent oracle: chi(G) = chi(G - e) - chi(G / e), contracting to a
/// simple graph (loops dropped, parallel edges collapsed).
IntPolynomial chromatic_poly_deletion_contraction(const Graph& g,
                                                  const Budget& budget = Budget{});

/// The sequence a_0..a_n of NBC subgraph counts by edge count.
std::vector<BigInt> nbc_coefficients(const Graph& g, const Budget& budget = Budget{});

/// True iff a_k^2 >= a_{k-1} a_{k+1} for all interior k.
bool is_log_concave(const std::vector<BigInt>& a);

/// Number of orientations of g with no directed cycle.
BigInt acyclic_orientation_count(const Graph& g, const Budget& budget = Budget{});

/// All acyclic orientations, in increasing order of their direction-bit
/// encoding.
std::vector<Orientation> acyclic_orientations(const Graph& g,
                                              const Budget& budget = Budget{});

/// Number of pairs (O, k) where O is an acyclic orientation and k a
/// [t]-coloring compatible with it.
BigInt compatible_pair_count(const Graph& g, int t, const Budget& budget = Budget{});

/// Wall-time and work comparison of the all-subgraphs and NBC expansions.
struct BenchResult {
  std::uint64_t full_subsets = 0;
  std::uint64_t nbc_subsets = 0;
  double full_ms = 0.0;
  double nbc_ms = 0.0;
  bool agree = false;
  IntPolynomial poly;
};

BenchResult bench_expansions(const Graph& g, const Budget& budget = Budget{});

}  // namespace chromabij
