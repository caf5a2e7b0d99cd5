#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chromabij/budget.hpp"
#include "chromabij/graph.hpp"
#include "chromabij/symfunc.hpp"

namespace chromabij {

/// Calls fn for every labeled simple graph on n vertices (2^C(n,2) of
/// them), edges in lexicographic order.
void for_each_graph(int n, const std::function<void(const Graph&)>& fn,
                    const Budget& budget = Budget{});

std::vector<Graph> enumerate_graphs(int n, const Budget& budget = Budget{});

/// Calls fn for every labeled tree on n vertices (n^(n-2) of them for
/// n >= 2, one for n = 1), decoded from Prüfer sequences.
void for_each_tree(int n, const std::function<void(const Graph&)>& fn,
                   const Budget& budget = Budget{});

std::vector<Graph> enumerate_trees(int n, const Budget& budget = Budget{});

/// Fixture graphs: butterfly, kite, net, x169, fig1.
Graph named_graph(std::string_view name);
std::vector<std::string> named_graph_names();

/// Vertex degrees sorted ascending.
std::vector<int> degree_sequence(const Graph& g);

bool is_tree(const Graph& g);

/// Canonical code of a tree (center-rooted recursive sorting); two trees
/// get the same code iff they are isomorphic.
std::string tree_canonical_code(const Graph& g);

/// Explicit vertex bijection between two isomorphic trees (image[v of a] =
/// vertex of b), or nullopt when the canonical codes differ.
std::optional<std::vector<int>> tree_isomorphism(const Graph& a, const Graph& b);

struct CheckResult {
  std::string name;
  std::string status;  ///< "pass" | "fail" | "skipped"
  std::string details;
};

struct VerificationReport {
  std::string graph_id;
  std::vector<CheckResult> checks;
  int passed = 0;
  int failed = 0;
  int skipped = 0;

  bool all_passed() const noexcept { return failed == 0; }
};

/// Runs the whole identity battery against one graph: agreement of the four
/// chromatic routes, equality of the two symmetric-function expansions and
/// their specializations, the involution audit, the monomial oracle, both
/// reciprocity counts, both bijection round trips, the omega reciprocity at
/// the monomial level, NBC coefficient reconstruction with log-concavity,
/// and the tree formula where it applies.
VerificationReport check_theorems(const Graph& g, int t_max, int mu_max,
                                  const Budget& budget = Budget{});

struct TreeSweepReport {
  int n = 0;
  std::uint64_t labeled_trees = 0;
  std::uint64_t iso_classes = 0;
  bool chi_formula_ok = true;
  /// Pairs of canonical codes whose representatives shared a chromatic
  /// symmetric function; empty means the sweep found no collision.
  std::vector<std::pair<std::string, std::string>> collisions;
};

/// Groups all labeled trees on n vertices into isomorphism classes and
/// checks that distinct classes have distinct chromatic symmetric
/// functions (and that every class satisfies the tree chromatic formula).
TreeSweepReport tree_conjecture_sweep(int n, const Budget& budget = Budget{});

}  // namespace chromabij
