#include "chromabij/polynomial.hpp"

#include <utility>

#include "chromabij/errors.hpp"

namespace chromabij {

namespace {
const BigInt kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending_coefficients)
    : coefficients_(std::move(ascending_coefficients)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(BigInt coefficient, int exponent) {
  if (exponent < 0) throw invalid_input_error("negative exponent");
  std::vector<BigInt> c(exponent + 1, BigInt(0));
  c[exponent] = std::move(coefficient);
  return IntPolynomial(std::move(c));
}

const BigInt& IntPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coefficients_.size())) return kZero;
  return coefficients_[k];
}

void IntPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size())
    coefficients_.resize(other.coefficients_.size(), BigInt(0));
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i)
    coefficients_[i] += other.coefficients_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size())
    coefficients_.resize(other.coefficients_.size(), BigInt(0));
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i)
    coefficients_[i] -= other.coefficients_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return IntPolynomial();
  std::vector<BigInt> c(a.coefficients_.size() + b.coefficients_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
      c[i + j] += a.coefficients_[i] * b.coefficients_[j];
  return IntPolynomial(std::move(c));
}

BigInt evaluate(const IntPolynomial& p, const BigInt& t) {
  BigInt acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

IntPolynomial poly_pow(const IntPolynomial& base, int exponent) {
  if (exponent < 0) throw invalid_input_error("negative exponent");
  IntPolynomial result = IntPolynomial::monomial(1, 0);
  for (int i = 0; i < exponent; ++i) result = result * base;
  return result;
}

IntPolynomial tree_chromatic_polynomial(int n) {
  if (n < 1) throw invalid_input_error("trees have at least one vertex");
  const IntPolynomial t = IntPolynomial::monomial(1, 1);
  const IntPolynomial t_minus_1 = t - IntPolynomial::monomial(1, 0);
  return t * poly_pow(t_minus_1, n - 1);
}

}  // namespace chromabij
