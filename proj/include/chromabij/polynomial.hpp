#pragma once

#include <vector>

#include "chromabij/bigint.hpp"

namespace chromabij {

/// Dense integer polynomial in one variable t; index k holds the
/// coefficient of t^k. Canonical form stores no trailing zeros, so the zero
/// polynomial is the empty sequence.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending_coefficients);

  static IntPolynomial monomial(BigInt coefficient, int exponent);

  bool is_zero() const noexcept { return coefficients_.empty(); }
  /// Degree of the zero polynomial is -1.
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }

  /// Coefficient of t^k (zero beyond the stored degree).
  const BigInt& coefficient(int k) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    a += b;
    return a;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    a -= b;
    return a;
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coefficients_ == b.coefficients_;
  }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) {
    return !(a == b);
  }

 private:
  void trim();
  std::vector<BigInt> coefficients_;
};

/// Exact Horner evaluation at any integer, negative arguments included.
BigInt evaluate(const IntPolynomial& p, const BigInt& t);

IntPolynomial poly_pow(const IntPolynomial& base, int exponent);

/// t(t-1)^(n-1) for n >= 1; the chromatic polynomial shared by every tree
/// on n vertices.
IntPolynomial tree_chromatic_polynomial(int n);

}  // namespace chromabij
