#pragma once

#include <map>
#include <vector>

#include "chromabij/bigint.hpp"
#include "chromabij/budget.hpp"
#include "chromabij/graph.hpp"
#include "chromabij/partition.hpp"
#include "chromabij/polynomial.hpp"

namespace chromabij {

/// Symmetric function written in the power-sum basis: a finitely supported
/// integer-coefficient map on integer partitions. No zero coefficient is
/// ever stored.
class PSymFunc {
 public:
  using TermMap = std::map<Partition, BigInt, PartitionOrder>;

  PSymFunc() = default;

  /// The basis element p_lambda.
  static PSymFunc basis(const Partition& lambda);

  bool is_zero() const noexcept { return terms_.empty(); }
  const TermMap& terms() const noexcept { return terms_; }

  /// Accumulates c * p_lambda, erasing the term if it cancels.
  PSymFunc& add_term(const Partition& lambda, const BigInt& c);

  PSymFunc& operator+=(const PSymFunc& other);
  PSymFunc& operator-=(const PSymFunc& other);
  friend PSymFunc operator+(PSymFunc a, const PSymFunc& b) { return a += b; }
  friend PSymFunc operator-(PSymFunc a, const PSymFunc& b) { return a -= b; }

  /// Product via p_a p_b = p_(parts of a and b merged); internal helper for
  /// assembling basis elements, not a general ring implementation.
  friend PSymFunc operator*(const PSymFunc& a, const PSymFunc& b);

  PSymFunc scaled(const BigInt& c) const;

  friend bool operator==(const PSymFunc& a, const PSymFunc& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const PSymFunc& a, const PSymFunc& b) { return !(a == b); }

 private:
  TermMap terms_;
};

/// Polynomial in mu variables: exponent vector -> integer coefficient.
class MonomialMap {
 public:
  using TermMap = std::map<std::vector<int>, BigInt>;

  explicit MonomialMap(int variable_count);

  int variable_count() const noexcept { return mu_; }
  const TermMap& terms() const noexcept { return terms_; }
  MonomialMap& add_term(const std::vector<int>& exponents, const BigInt& c);

  friend bool operator==(const MonomialMap& a, const MonomialMap& b) {
    return a.mu_ == b.mu_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MonomialMap& a, const MonomialMap& b) {
    return !(a == b);
  }

 private:
  int mu_;
  TermMap terms_;
};

/// Chromatic symmetric function as the signed sum over all spanning
/// subgraphs: sum over S of (-1)^|S| p_(lambda(S)).
PSymFunc csf_all_subgraphs(const Graph& g, const Budget& budget = Budget{});

/// Same sum restricted to broken-circuit-free subgraphs; identical value.
PSymFunc csf_nbc(const Graph& g, const Budget& budget = Budget{});

/// The involution omega: the term on a partition of n with l parts is
/// scaled by (-1)^(n-l).
PSymFunc omega(const PSymFunc& f);

/// Sets every variable in [t] to 1 and the rest to 0: each p_lambda becomes
/// t^(length of lambda), giving a polynomial in t.
IntPolynomial specialize(const PSymFunc& f);

/// Substitutes p_k = x_1^k + ... + x_mu^k and expands.
MonomialMap expand_monomials(const PSymFunc& f, int mu, const Budget& budget = Budget{});

/// Direct truncation of the defining sum: the weight x^k summed over all
/// proper colorings with colors in [mu].
MonomialMap csf_bruteforce(const Graph& g, int mu, const Budget& budget = Budget{});

/// Weight generating function of pairs (acyclic orientation, compatible
/// [mu]-coloring); matches expand_monomials(omega(csf), mu).
MonomialMap compatible_pair_generating(const Graph& g, int mu,
                                       const Budget& budget = Budget{});

}  // namespace chromabij
