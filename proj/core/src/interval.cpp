#include "mrbound/interval.hpp"

#include <algorithm>
#include <utility>

#include "mrbound/error.hpp"

namespace mrbound {
namespace {

// Scratch MPFR value with RAII cleanup.
class Scratch {
 public:
  explicit Scratch(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Scratch() { mpfr_clear(v_); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  mpfr_ptr get() { return v_; }
  operator mpfr_ptr() { return v_; }

 private:
  mpfr_t v_;
};

mpfr_prec_t joint(const RealInterval& a, const RealInterval& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

void RealInterval::init(mpfr_prec_t prec) {
  prec_ = std::max<mpfr_prec_t>(prec, MPFR_PREC_MIN);
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
}

RealInterval::RealInterval(mpfr_prec_t prec) {
  init(prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

RealInterval::RealInterval(long value, mpfr_prec_t prec) {
  init(prec);
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

RealInterval::RealInterval(const Integer& value, mpfr_prec_t prec) {
  init(prec);
  mpfr_set_z(lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_, value.get_mpz_t(), MPFR_RNDU);
}

RealInterval::RealInterval(const Rational& value, mpfr_prec_t prec) {
  init(prec);
  mpfr_set_q(lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, value.get_mpq_t(), MPFR_RNDU);
}

RealInterval::RealInterval(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec) {
  init(std::max({prec, mpfr_get_prec(lo), mpfr_get_prec(hi)}));
  mpfr_set(lo_, lo, MPFR_RNDD);
  mpfr_set(hi_, hi, MPFR_RNDU);
}

RealInterval::RealInterval(const RealInterval& other) {
  init(other.prec_);
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

RealInterval::RealInterval(RealInterval&& other) noexcept {
  init(other.prec_);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

RealInterval& RealInterval::operator=(const RealInterval& other) {
  if (this != &other) {
    if (prec_ != other.prec_) {
      mpfr_set_prec(lo_, other.prec_);
      mpfr_set_prec(hi_, other.prec_);
      prec_ = other.prec_;
    }
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
  }
  return *this;
}

RealInterval& RealInterval::operator=(RealInterval&& other) noexcept {
  if (this != &other) {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    std::swap(prec_, other.prec_);
  }
  return *this;
}

RealInterval::~RealInterval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

double RealInterval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double RealInterval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

bool RealInterval::contains(const Rational& value) const {
  return mpfr_cmp_q(lo_, value.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, value.get_mpq_t()) >= 0;
}

bool RealInterval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool RealInterval::is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }

bool RealInterval::is_positive() const { return mpfr_sgn(lo_) > 0; }

bool RealInterval::within(const Rational& lo, const Rational& hi) const {
  return mpfr_cmp_q(lo_, lo.get_mpq_t()) >= 0 && mpfr_cmp_q(hi_, hi.get_mpq_t()) <= 0;
}

bool RealInterval::relative_width_at_most(int bits) const {
  if (is_point()) return true;
  if (contains_zero()) return false;
  Scratch width(prec_ + 2);
  mpfr_sub(width, hi_, lo_, MPFR_RNDU);
  Scratch scale(prec_);
  if (mpfr_sgn(lo_) > 0) {
    mpfr_set(scale.get(), lo_, MPFR_RNDD);
  } else {
    mpfr_neg(scale, hi_, MPFR_RNDD);
  }
  mpfr_mul_2si(scale, scale, -bits, MPFR_RNDD);
  return mpfr_lessequal_p(width.get(), scale.get()) != 0;
}

RealInterval RealInterval::midpoint() const {
  Scratch mid(prec_ + 1);
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
  return RealInterval(mid.get(), mid.get(), prec_ + 1);
}

std::string RealInterval::to_string(int digits) const {
  return "[" + format_decimal(lo_, digits) + "," + format_decimal(hi_, digits) + "]";
}

std::string format_decimal(mpfr_srcptr value, int digits) {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*RNg", digits, value);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

RealInterval operator-(const RealInterval& a) {
  RealInterval out(a.precision());
  mpfr_neg(out.lower(), a.upper(), MPFR_RNDD);
  mpfr_neg(out.upper(), a.lower(), MPFR_RNDU);
  return out;
}

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
  RealInterval out(joint(a, b));
  mpfr_add(out.lower(), a.lower(), b.lower(), MPFR_RNDD);
  mpfr_add(out.upper(), a.upper(), b.upper(), MPFR_RNDU);
  return out;
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
  RealInterval out(joint(a, b));
  mpfr_sub(out.lower(), a.lower(), b.upper(), MPFR_RNDD);
  mpfr_sub(out.upper(), a.upper(), b.lower(), MPFR_RNDU);
  return out;
}

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
  const mpfr_prec_t prec = joint(a, b);
  RealInterval out(prec);
  if (mpfr_sgn(a.lower()) >= 0 && mpfr_sgn(b.lower()) >= 0) {
    mpfr_mul(out.lower(), a.lower(), b.lower(), MPFR_RNDD);
    mpfr_mul(out.upper(), a.upper(), b.upper(), MPFR_RNDU);
    return out;
  }
  mpfr_srcptr as[2] = {a.lower(), a.upper()};
  mpfr_srcptr bs[2] = {b.lower(), b.upper()};
  Scratch t(prec);
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), out.lower())) mpfr_set(out.lower(), t.get(), MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), out.upper())) mpfr_set(out.upper(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return out;
}

RealInterval operator/(const RealInterval& a, const RealInterval& b) {
  if (b.contains_zero()) {
    throw Error(ErrorCode::kDivisionByZero, "interval divisor contains zero");
  }
  const mpfr_prec_t prec = joint(a, b);
  RealInterval out(prec);
  mpfr_srcptr as[2] = {a.lower(), a.upper()};
  mpfr_srcptr bs[2] = {b.lower(), b.upper()};
  Scratch t(prec);
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_div(t, x, y, MPFR_RNDD);
      if (first || mpfr_less_p(t.get(), out.lower())) mpfr_set(out.lower(), t.get(), MPFR_RNDD);
      mpfr_div(t, x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(t.get(), out.upper())) mpfr_set(out.upper(), t.get(), MPFR_RNDU);
      first = false;
    }
  }
  return out;
}

RealInterval sqr(const RealInterval& a) {
  RealInterval m = abs(a);
  RealInterval out(a.precision());
  mpfr_sqr(out.lower(), m.lower(), MPFR_RNDD);
  mpfr_sqr(out.upper(), m.upper(), MPFR_RNDU);
  return out;
}

RealInterval sqrt(const RealInterval& a) {
  if (mpfr_sgn(a.upper()) < 0) {
    throw Error(ErrorCode::kInvalidArgument, "square root of a negative interval");
  }
  RealInterval out(a.precision());
  if (mpfr_sgn(a.lower()) <= 0) {
    mpfr_set_zero(out.lower(), 1);
  } else {
    mpfr_sqrt(out.lower(), a.lower(), MPFR_RNDD);
  }
  mpfr_sqrt(out.upper(), a.upper(), MPFR_RNDU);
  return out;
}

RealInterval exp(const RealInterval& a) {
  RealInterval out(a.precision());
  mpfr_exp(out.lower(), a.lower(), MPFR_RNDD);
  mpfr_exp(out.upper(), a.upper(), MPFR_RNDU);
  return out;
}

RealInterval log(const RealInterval& a) {
  if (!a.is_positive()) {
    throw Error(ErrorCode::kInvalidArgument, "logarithm of a non-positive interval");
  }
  RealInterval out(a.precision());
  mpfr_log(out.lower(), a.lower(), MPFR_RNDD);
  mpfr_log(out.upper(), a.upper(), MPFR_RNDU);
  return out;
}

RealInterval pow(const RealInterval& a, unsigned long exponent) {
  if (exponent == 0) return RealInterval(1L, a.precision());
  const bool even = exponent % 2 == 0;
  RealInterval base = even ? abs(a) : a;
  RealInterval out(a.precision());
  mpfr_pow_ui(out.lower(), base.lower(), exponent, MPFR_RNDD);
  mpfr_pow_ui(out.upper(), base.upper(), exponent, MPFR_RNDU);
  return out;
}

RealInterval abs(const RealInterval& a) {
  if (mpfr_sgn(a.lower()) >= 0) return a;
  if (mpfr_sgn(a.upper()) <= 0) return -a;
  RealInterval out(a.precision());
  mpfr_set_zero(out.lower(), 1);
  if (mpfr_cmpabs(a.lower(), a.upper()) > 0) {
    mpfr_neg(out.upper(), a.lower(), MPFR_RNDU);
  } else {
    mpfr_set(out.upper(), a.upper(), MPFR_RNDU);
  }
  return out;
}

RealInterval max(const RealInterval& a, const RealInterval& b) {
  RealInterval out(joint(a, b));
  mpfr_max(out.lower(), a.lower(), b.lower(), MPFR_RNDD);
  mpfr_max(out.upper(), a.upper(), b.upper(), MPFR_RNDU);
  return out;
}

RealInterval min(const RealInterval& a, const RealInterval& b) {
  RealInterval out(joint(a, b));
  mpfr_min(out.lower(), a.lower(), b.lower(), MPFR_RNDD);
  mpfr_min(out.upper(), a.upper(), b.upper(), MPFR_RNDU);
  return out;
}

RealInterval hull(const RealInterval& a, const RealInterval& b) {
  RealInterval out(joint(a, b));
  mpfr_min(out.lower(), a.lower(), b.lower(), MPFR_RNDD);
  mpfr_max(out.upper(), a.upper(), b.upper(), MPFR_RNDU);
  return out;
}

RealInterval intersect(const RealInterval& a, const RealInterval& b) {
  RealInterval out(joint(a, b));
  mpfr_max(out.lower(), a.lower(), b.lower(), MPFR_RNDD);
  mpfr_min(out.upper(), a.upper(), b.upper(), MPFR_RNDU);
  if (mpfr_greater_p(out.lower(), out.upper())) return a;
  return out;
}

Tri certainly_le(const RealInterval& a, const RealInterval& b) {
  if (mpfr_lessequal_p(a.upper(), b.lower())) return Tri::kTrue;
  if (mpfr_greater_p(a.lower(), b.upper())) return Tri::kFalse;
  return Tri::kUndecided;
}

Tri certainly_lt(const RealInterval& a, const RealInterval& b) {
  if (mpfr_less_p(a.upper(), b.lower())) return Tri::kTrue;
  if (mpfr_greaterequal_p(a.lower(), b.upper())) return Tri::kFalse;
  return Tri::kUndecided;
}

ComplexInterval::ComplexInterval(mpfr_prec_t prec) : re_(prec), im_(prec) {}

ComplexInterval::ComplexInterval(RealInterval re, RealInterval im)
    : re_(std::move(re)), im_(std::move(im)) {}

ComplexInterval::ComplexInterval(RealInterval re) : re_(std::move(re)), im_(re_.precision()) {}

mpfr_prec_t ComplexInterval::precision() const { return std::max(re_.precision(), im_.precision()); }

bool ComplexInterval::is_real() const { return im_.is_point() && mpfr_zero_p(im_.lower()); }

RealInterval ComplexInterval::abs() const {
  if (is_real()) return mrbound::abs(re_);
  return sqrt(sqr(re_) + sqr(im_));
}

ComplexInterval ComplexInterval::conj() const { return ComplexInterval(re_, -im_); }

ComplexInterval ComplexInterval::midpoint() const {
  return ComplexInterval(re_.midpoint(), im_.midpoint());
}

std::string ComplexInterval::to_string(int digits) const {
  return re_.to_string(digits) + "+i" + im_.to_string(digits);
}

ComplexInterval operator-(const ComplexInterval& a) { return ComplexInterval(-a.re(), -a.im()); }

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return ComplexInterval(a.re() + b.re(), a.im() + b.im());
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  return ComplexInterval(a.re() - b.re(), a.im() - b.im());
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  if (a.is_real() && b.is_real()) {
    return ComplexInterval(a.re() * b.re(), RealInterval(std::max(a.precision(), b.precision())));
  }
  return ComplexInterval(a.re() * b.re() - a.im() * b.im(), a.re() * b.im() + a.im() * b.re());
}

ComplexInterval operator*(const ComplexInterval& a, const RealInterval& b) {
  return ComplexInterval(a.re() * b, a.im() * b);
}

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
  if (b.is_real()) {
    return ComplexInterval(a.re() / b.re(), a.im() / b.re());
  }
  const RealInterval denom = sqr(b.re()) + sqr(b.im());
  if (denom.contains_zero()) {
    throw Error(ErrorCode::kDivisionByZero, "complex interval divisor contains zero");
  }
  const ComplexInterval num = a * b.conj();
  return ComplexInterval(num.re() / denom, num.im() / denom);
}

ComplexInterval pow(const ComplexInterval& a, unsigned long exponent) {
  ComplexInterval result(RealInterval(1L, a.precision()));
  ComplexInterval base = a;
  while (exponent > 0) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

ComplexInterval intersect(const ComplexInterval& a, const ComplexInterval& b) {
  return ComplexInterval(intersect(a.re(), b.re()), intersect(a.im(), b.im()));
}

}  // namespace mrbound
