#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mrbound/interval.hpp"
#include "mrbound/rational.hpp"

namespace mrbound {

/// Dense univariate polynomial over Z, coefficients lowest degree first.
/// Trailing zeros are stripped on construction; the zero polynomial has
/// no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  const Integer& lead() const { return coeffs_.back(); }
  /// Coefficient of X^i (zero past the degree).
  Integer coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  std::span<const Integer> coefficients() const { return coeffs_; }

  Integer content() const;
  /// Divided by its content, sign fixed so the leading coefficient is positive.
  IntPolynomial primitive_part() const;
  IntPolynomial derivative() const;

  Rational evaluate(const Rational& x) const;
  ComplexInterval evaluate(const ComplexInterval& x) const;

  /// Human readable form, e.g. "X^2 - X - 1".
  std::string to_string(char variable = 'X') const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

/// num / den when den divides num in Z[X]; nullopt otherwise.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& num, const IntPolynomial& den);

/// Primitive gcd with positive leading coefficient (zero only if both inputs are zero).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Yun decomposition p = c * prod q_i^{e_i} with each q_i primitive, squarefree and
/// pairwise coprime, non-constant. The constant c is returned separately.
struct SquarefreeDecomposition {
  Integer constant;
  std::vector<std::pair<IntPolynomial, unsigned>> factors;
};
SquarefreeDecomposition squarefree_decomposition(const IntPolynomial& p);

/// Clears denominators and returns the primitive integer polynomial with
/// positive leading coefficient proportional to `coeffs` (lowest degree first).
IntPolynomial primitive_from_rational(std::span<const Rational> coeffs);

}  // namespace mrbound
