#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "mrbound/error.hpp"
#include "mrbound/int_polynomial.hpp"
#include "mrbound/interval.hpp"
#include "mrbound/rational.hpp"
#include "mrbound/roots.hpp"

namespace mrbound {

class FieldElement;

/// Raised by NumberField::create. When a factorization was found, `witness`
/// holds non-trivial factors whose product is the rejected polynomial.
class NotIrreducibleError : public Error {
 public:
  NotIrreducibleError(const std::string& message, std::vector<IntPolynomial> witness);
  const std::vector<IntPolynomial>& witness() const { return witness_; }

 private:
  std::vector<IntPolynomial> witness_;
};

/// One complex embedding sigma_t: the image of the generator theta.
struct Embedding {
  ComplexInterval root;  // enclosure of sigma_t(theta)
  bool real = false;
};

using EmbeddingTable = std::vector<Embedding>;

/// K = Q[X]/(p) for a monic irreducible integer polynomial p.
///
/// Instances are immutable apart from the embedding cache and are always
/// held through shared_ptr so elements can refer back to their field.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  /// Validates monicity, certifies irreducibility and isolates the roots.
  /// Throws Error(kNotMonic) or NotIrreducibleError.
  static std::shared_ptr<const NumberField> create(IntPolynomial minpoly);

  /// The rationals, presented as Q[X]/(X).
  static std::shared_ptr<const NumberField> rationals();

  const IntPolynomial& minpoly() const { return minpoly_; }
  int degree() const { return minpoly_.degree(); }

  /// Embeddings at the requested precision in a fixed order: real ones
  /// ascending, then complex ones by (re, im). The order never changes with
  /// precision and each refinement lies inside every coarser cached table.
  std::shared_ptr<const EmbeddingTable> embeddings(mpfr_prec_t prec) const;

  /// Index of the embedding used for the "usual" absolute value: the largest
  /// real embedding if any, otherwise the first complex one with Im > 0.
  std::size_t default_place() const { return default_place_; }
  std::size_t real_place_count() const { return real_places_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;
  FieldElement from_rational(const Rational& value) const;
  /// Throws Error(kInvalidArgument) unless coords.size() == degree().
  FieldElement element(std::vector<Rational> coords) const;

  bool same_field(const NumberField& other) const;

  struct Private;
  NumberField(const Private&, IntPolynomial minpoly, std::vector<RootEnclosure> base_roots);

 private:
  std::shared_ptr<const EmbeddingTable> refine(mpfr_prec_t prec) const;

  IntPolynomial minpoly_;
  std::vector<RootEnclosure> base_roots_;
  std::size_t default_place_ = 0;
  std::size_t real_places_ = 0;

  mutable std::mutex cache_mutex_;
  mutable std::map<mpfr_prec_t, std::shared_ptr<const EmbeddingTable>> cache_;
};

/// x = sum_i coords[i] * theta^i in the power basis of its field.
class FieldElement {
 public:
  FieldElement(std::shared_ptr<const NumberField> field, std::vector<Rational> coords);

  const NumberField& field() const { return *field_; }
  const std::shared_ptr<const NumberField>& field_ptr() const { return field_; }
  std::span<const Rational> coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Constant coordinate; meaningful when is_rational().
  const Rational& constant() const { return coords_.front(); }

  /// sigma_place(x) at the given precision.
  ComplexInterval embed(std::size_t place, mpfr_prec_t prec) const;
  std::vector<ComplexInterval> conjugates(mpfr_prec_t prec) const;

  /// "55", "1/5*t", "1/2 + 1/2*t", ...
  std::string to_string() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  std::shared_ptr<const NumberField> field_;
  std::vector<Rational> coords_;
};

FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const Rational& scalar, const FieldElement& a);
FieldElement operator*(const Integer& scalar, const FieldElement& a);

/// Throws Error(kDivisionByZero) for x = 0.
FieldElement inverse(const FieldElement& x);
FieldElement pow(const FieldElement& x, unsigned long exponent);

/// Matrix of multiplication by x; column j holds the coordinates of x*theta^j.
std::vector<std::vector<Rational>> multiplication_matrix(const FieldElement& x);

/// Primitive integer minimal polynomial with positive leading coefficient.
IntPolynomial minimal_polynomial(const FieldElement& x);
bool is_algebraic_integer(const FieldElement& x);
/// Least positive d with d*x an algebraic integer.
Integer denominator(const FieldElement& x);
Rational field_norm(const FieldElement& x);
Rational field_trace(const FieldElement& x);

/// max_t |sigma_t(x)|. Throws PrecisionCapExceeded when prec exceeds `cap`.
RealInterval house(const FieldElement& x, mpfr_prec_t prec, mpfr_prec_t cap = kPrecisionCap);

/// Throws Error(kFieldMismatch) unless both elements live in the same field.
void require_same_field(const FieldElement& a, const FieldElement& b);

/// Certifies irreducibility over Q of a monic squarefree polynomial with the
/// given root enclosures. Returns a non-trivial factorization if one exists,
/// an empty vector if irreducible; throws NotIrreducibleError when neither can
/// be established.
std::vector<IntPolynomial> find_factorization(const IntPolynomial& p, mpfr_prec_t prec);

}  // namespace mrbound
