#pragma once

#include <mpfr.h>

#include <string>

#include "mrbound/rational.hpp"

namespace mrbound {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;
inline constexpr mpfr_prec_t kPrecisionCap = 4096;

/// Outcome of comparing enclosures. Exact identities are decided exactly;
/// overlapping enclosures yield kUndecided.
enum class Tri { kFalse, kTrue, kUndecided };

/// Closed real interval [lo, hi] with MPFR endpoints rounded outward.
///
/// Every operation returns an interval containing the exact result for any
/// choice of exact inputs inside the operands. Results take the larger of the
/// operand precisions.
class RealInterval {
 public:
  explicit RealInterval(mpfr_prec_t prec = kDefaultPrecision);
  RealInterval(long value, mpfr_prec_t prec);
  RealInterval(const Integer& value, mpfr_prec_t prec);
  RealInterval(const Rational& value, mpfr_prec_t prec);
  /// Hull of two MPFR values (taken exactly, precision widened if needed).
  RealInterval(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec);

  RealInterval(const RealInterval& other);
  RealInterval(RealInterval&& other) noexcept;
  RealInterval& operator=(const RealInterval& other);
  RealInterval& operator=(RealInterval&& other) noexcept;
  ~RealInterval();

  mpfr_prec_t precision() const { return prec_; }
  mpfr_srcptr lower() const { return lo_; }
  mpfr_srcptr upper() const { return hi_; }
  mpfr_ptr lower() { return lo_; }
  mpfr_ptr upper() { return hi_; }

  double lower_double() const;
  double upper_double() const;

  bool contains(const Rational& value) const;
  bool contains_zero() const;
  bool is_point() const;
  bool is_positive() const;  // lo > 0
  /// Subset test against exact rational bounds.
  bool within(const Rational& lo, const Rational& hi) const;
  /// (hi - lo) <= 2^-bits * min(|lo|, |hi|), rounded conservatively.
  /// Intervals containing zero only qualify when they are the point zero.
  bool relative_width_at_most(int bits) const;

  /// Midpoint as a point interval.
  RealInterval midpoint() const;

  /// "[lo,hi]" with `digits` significant digits, round-to-nearest.
  std::string to_string(int digits = 12) const;

 private:
  void init(mpfr_prec_t prec);

  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

RealInterval operator-(const RealInterval& a);
RealInterval operator+(const RealInterval& a, const RealInterval& b);
RealInterval operator-(const RealInterval& a, const RealInterval& b);
RealInterval operator*(const RealInterval& a, const RealInterval& b);
/// Throws Error(kDivisionByZero) when b contains zero.
RealInterval operator/(const RealInterval& a, const RealInterval& b);

RealInterval sqr(const RealInterval& a);
RealInterval sqrt(const RealInterval& a);  // negative part clipped to zero
RealInterval exp(const RealInterval& a);
RealInterval log(const RealInterval& a);  // requires lo > 0
RealInterval pow(const RealInterval& a, unsigned long exponent);
RealInterval abs(const RealInterval& a);
RealInterval max(const RealInterval& a, const RealInterval& b);
RealInterval min(const RealInterval& a, const RealInterval& b);
RealInterval hull(const RealInterval& a, const RealInterval& b);
/// Intersection of two enclosures of the same quantity. If the enclosures
/// are disjoint (impossible for valid inputs) `a` is returned unchanged.
RealInterval intersect(const RealInterval& a, const RealInterval& b);

/// a <= b decided from the endpoints.
Tri certainly_le(const RealInterval& a, const RealInterval& b);
/// a < b decided from the endpoints.
Tri certainly_lt(const RealInterval& a, const RealInterval& b);

/// Decimal rendering of one MPFR value, `digits` significant, round-to-nearest.
std::string format_decimal(mpfr_srcptr value, int digits = 12);

/// Rectangular complex enclosure re + i*im.
class ComplexInterval {
 public:
  explicit ComplexInterval(mpfr_prec_t prec = kDefaultPrecision);
  ComplexInterval(RealInterval re, RealInterval im);
  explicit ComplexInterval(RealInterval re);

  const RealInterval& re() const { return re_; }
  const RealInterval& im() const { return im_; }
  mpfr_prec_t precision() const;

  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  /// True when the imaginary part is the exact point zero.
  bool is_real() const;

  RealInterval abs() const;
  ComplexInterval conj() const;
  ComplexInterval midpoint() const;

  std::string to_string(int digits = 12) const;

 private:
  RealInterval re_;
  RealInterval im_;
};

ComplexInterval operator-(const ComplexInterval& a);
ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const ComplexInterval& a, const RealInterval& b);
/// Throws Error(kDivisionByZero) when |b|^2 contains zero.
ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval pow(const ComplexInterval& a, unsigned long exponent);
ComplexInterval intersect(const ComplexInterval& a, const ComplexInterval& b);

}  // namespace mrbound
