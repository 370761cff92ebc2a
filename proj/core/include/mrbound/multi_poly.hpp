#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "mrbound/number_field.hpp"

namespace mrbound {

/// A point n of N_0^s with |n| = n_1 + ... + n_s.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<std::uint64_t> coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<std::uint64_t> coords) : coords_(coords) {}

  std::size_t arity() const { return coords_.size(); }
  std::uint64_t operator[](std::size_t j) const { return coords_[j]; }
  std::span<const std::uint64_t> coords() const { return coords_; }
  std::uint64_t norm() const;
  bool is_zero() const { return norm() == 0; }

  /// "(n1;...;ns)"
  std::string to_string() const;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;

 private:
  std::vector<std::uint64_t> coords_;
};

using Exponents = std::vector<unsigned>;

/// Multivariate polynomial in s variables over a number field, stored
/// sparsely without zero coefficients.
class MultiPoly {
 public:
  MultiPoly(std::shared_ptr<const NumberField> field, std::size_t arity);

  static MultiPoly constant(const FieldElement& value, std::size_t arity);

  const NumberField& field() const { return *field_; }
  const std::shared_ptr<const NumberField>& field_ptr() const { return field_; }
  std::size_t arity() const { return arity_; }
  const std::map<Exponents, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coefficient * X^exponents, dropping the monomial if it cancels.
  void add_term(const Exponents& exponents, const FieldElement& coefficient);

  /// Maximum total degree over stored monomials (0 for the zero polynomial).
  unsigned absolute_degree() const;

  /// Exact value at n. Throws Error(kArityMismatch) when n has the wrong length.
  FieldElement evaluate(const LatticePoint& n) const;

  /// Multiplies every coefficient by a rational scalar.
  MultiPoly scaled(const Rational& factor) const;

  std::string to_string() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  std::shared_ptr<const NumberField> field_;
  std::size_t arity_;
  std::map<Exponents, FieldElement> terms_;
};

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a);

}  // namespace mrbound
