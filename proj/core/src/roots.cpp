#include "mrbound/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "mrbound/error.hpp"

namespace mrbound {
namespace {

// Round-to-nearest complex value used only for the (uncertified) approximations.
class MpComplex {
 public:
  explicit MpComplex(mpfr_prec_t prec) {
    mpfr_init2(re_, prec);
    mpfr_init2(im_, prec);
    mpfr_set_zero(re_, 1);
    mpfr_set_zero(im_, 1);
  }
  MpComplex(const MpComplex& other) : MpComplex(mpfr_get_prec(other.re_)) {
    mpfr_set(re_, other.re_, MPFR_RNDN);
    mpfr_set(im_, other.im_, MPFR_RNDN);
  }
  MpComplex& operator=(const MpComplex& other) {
    mpfr_set(re_, other.re_, MPFR_RNDN);
    mpfr_set(im_, other.im_, MPFR_RNDN);
    return *this;
  }
  ~MpComplex() {
    mpfr_clear(re_);
    mpfr_clear(im_);
  }

  mpfr_ptr re() { return re_; }
  mpfr_ptr im() { return im_; }
  mpfr_srcptr re() const { return re_; }
  mpfr_srcptr im() const { return im_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(re_); }

  bool is_zero() const { return mpfr_zero_p(re_) && mpfr_zero_p(im_); }

  // this = a * b
  void mul(const MpComplex& a, const MpComplex& b) {
    MpComplex t(prec());
    mpfr_t s;
    mpfr_init2(s, prec());
    mpfr_mul(t.re_, a.re_, b.re_, MPFR_RNDN);
    mpfr_mul(s, a.im_, b.im_, MPFR_RNDN);
    mpfr_sub(t.re_, t.re_, s, MPFR_RNDN);
    mpfr_mul(t.im_, a.re_, b.im_, MPFR_RNDN);
    mpfr_mul(s, a.im_, b.re_, MPFR_RNDN);
    mpfr_add(t.im_, t.im_, s, MPFR_RNDN);
    mpfr_clear(s);
    *this = t;
  }
  // this = a / b, b non-zero
  void div(const MpComplex& a, const MpComplex& b) {
    mpfr_t den, s;
    mpfr_init2(den, prec());
    mpfr_init2(s, prec());
    mpfr_sqr(den, b.re_, MPFR_RNDN);
    mpfr_sqr(s, b.im_, MPFR_RNDN);
    mpfr_add(den, den, s, MPFR_RNDN);
    MpComplex conj(b);
    mpfr_neg(conj.im_, conj.im_, MPFR_RNDN);
    MpComplex t(prec());
    t.mul(a, conj);
    mpfr_div(re_, t.re_, den, MPFR_RNDN);
    mpfr_div(im_, t.im_, den, MPFR_RNDN);
    mpfr_clear(den);
    mpfr_clear(s);
  }
  void add(const MpComplex& a, const MpComplex& b) {
    mpfr_add(re_, a.re_, b.re_, MPFR_RNDN);
    mpfr_add(im_, a.im_, b.im_, MPFR_RNDN);
  }
  void sub(const MpComplex& a, const MpComplex& b) {
    mpfr_sub(re_, a.re_, b.re_, MPFR_RNDN);
    mpfr_sub(im_, a.im_, b.im_, MPFR_RNDN);
  }
  // Binary exponent of max(|re|, |im|); very negative for zero.
  long magnitude_exp() const {
    long e = -(1L << 40);
    if (!mpfr_zero_p(re_)) e = std::max<long>(e, mpfr_get_exp(re_));
    if (!mpfr_zero_p(im_)) e = std::max<long>(e, mpfr_get_exp(im_));
    return e;
  }

 private:
  mpfr_t re_;
  mpfr_t im_;
};

struct Horner {
  MpComplex value;
  MpComplex derivative;
};

Horner evaluate(const std::vector<MpComplex>& coeffs, const MpComplex& z) {
  const mpfr_prec_t prec = z.prec();
  Horner h{MpComplex(prec), MpComplex(prec)};
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    h.derivative.mul(h.derivative, z);
    h.derivative.add(h.derivative, h.value);
    h.value.mul(h.value, z);
    h.value.add(h.value, coeffs[k]);
  }
  return h;
}

double log2_abs(const Integer& v) {
  if (v == 0) return -std::numeric_limits<double>::infinity();
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log2(std::fabs(mant)) + static_cast<double>(exp);
}

std::vector<MpComplex> initial_guesses(const IntPolynomial& p, mpfr_prec_t prec) {
  const int n = p.degree();
  // Fujiwara bound, computed in log2 to survive very large coefficients.
  double log_radius = -1e300;
  const double log_lead = log2_abs(p.lead());
  for (int k = 1; k <= n; ++k) {
    const Integer& c = p.coefficients()[static_cast<std::size_t>(n - k)];
    if (c == 0) continue;
    double term = (log2_abs(c) - log_lead) / k;
    if (k == n) term = (log2_abs(c) - log_lead - 1.0) / k;
    log_radius = std::max(log_radius, term);
  }
  log_radius += 1.0;
  std::vector<MpComplex> guesses;
  guesses.reserve(static_cast<std::size_t>(n));
  mpfr_t radius, angle, t;
  mpfr_inits2(prec, radius, angle, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_d(radius, std::max(log_radius, -60.0), MPFR_RNDN);
  mpfr_ui_pow(radius, 2, radius, MPFR_RNDN);
  for (int k = 0; k < n; ++k) {
    MpComplex z(prec);
    mpfr_set_d(angle, 2.0 * std::numbers::pi * k / n + 0.4, MPFR_RNDN);
    mpfr_cos(t, angle, MPFR_RNDN);
    mpfr_mul(z.re(), t, radius, MPFR_RNDN);
    mpfr_sin(t, angle, MPFR_RNDN);
    mpfr_mul(z.im(), t, radius, MPFR_RNDN);
    guesses.push_back(z);
  }
  mpfr_clears(radius, angle, t, static_cast<mpfr_ptr>(nullptr));
  return guesses;
}

// Aberth-Ehrlich iteration (Gauss-Seidel updates) at working precision `prec`.
std::vector<MpComplex> aberth(const IntPolynomial& p, mpfr_prec_t prec) {
  const int n = p.degree();
  std::vector<MpComplex> coeffs;
  coeffs.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    MpComplex v(prec);
    mpfr_set_z(v.re(), c.get_mpz_t(), MPFR_RNDN);
    coeffs.push_back(v);
  }
  std::vector<MpComplex> z = initial_guesses(p, prec);
  const int max_iterations = 400 + static_cast<int>(prec / 8);
  MpComplex sum(prec), diff(prec), inv(prec), denom(prec), step(prec), one(prec), perturb(prec);
  mpfr_set_ui(one.re(), 1, MPFR_RNDN);
  for (int iter = 0; iter < max_iterations; ++iter) {
    bool converged = true;
    for (int i = 0; i < n; ++i) {
      Horner h = evaluate(coeffs, z[i]);
      if (h.value.is_zero()) continue;
      mpfr_set_zero(sum.re(), 1);
      mpfr_set_zero(sum.im(), 1);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        diff.sub(z[i], z[j]);
        if (diff.is_zero()) continue;
        inv.div(one, diff);
        sum.add(sum, inv);
      }
      // step = p / (p' - p * sum)
      denom.mul(h.value, sum);
      denom.sub(h.derivative, denom);
      if (denom.is_zero()) {
        mpfr_set_d(perturb.re(), 1e-3, MPFR_RNDN);
        mpfr_set_d(perturb.im(), 1e-3, MPFR_RNDN);
        z[i].add(z[i], perturb);
        converged = false;
        continue;
      }
      step.div(h.value, denom);
      z[i].sub(z[i], step);
      const long scale = std::max<long>(z[i].magnitude_exp(), -static_cast<long>(prec));
      if (!step.is_zero() && step.magnitude_exp() > scale - static_cast<long>(prec) + 6) converged = false;
    }
    if (converged) break;
  }
  return z;
}

ComplexInterval to_interval(const MpComplex& z) {
  return ComplexInterval(RealInterval(z.re(), z.re(), z.prec()), RealInterval(z.im(), z.im(), z.prec()));
}

bool less_by_center(const RootEnclosure& a, const RootEnclosure& b) {
  if (a.real != b.real) return a.real;
  const int c = mpfr_cmp(a.center.re().lower(), b.center.re().lower());
  if (c != 0) return c < 0;
  return mpfr_cmp(a.center.im().lower(), b.center.im().lower()) < 0;
}

std::optional<std::vector<RootEnclosure>> certify(const IntPolynomial& p, std::vector<MpComplex> z,
                                                  mpfr_prec_t prec) {
  const int n = p.degree();
  // Snap near-real approximations onto the axis; the certification below then
  // proves the root real (its disk is conjugation-symmetric and holds one root).
  for (auto& zi : z) {
    if (mpfr_zero_p(zi.im())) continue;
    const long scale = zi.magnitude_exp();
    if (mpfr_get_exp(zi.im()) < scale - static_cast<long>(prec / 2)) mpfr_set_zero(zi.im(), 1);
  }
  std::vector<ComplexInterval> centers;
  centers.reserve(z.size());
  for (const auto& zi : z) centers.push_back(to_interval(zi));

  const RealInterval lead_abs = abs(RealInterval(p.lead(), prec));
  const RealInterval degree(static_cast<long>(n), prec);
  std::vector<RootEnclosure> out;
  out.reserve(z.size());
  for (int i = 0; i < n; ++i) {
    RealInterval denom = lead_abs;
    for (int j = 0; j < n; ++j) {
      if (j != i) denom = denom * (centers[i] - centers[j]).abs();
    }
    if (denom.contains_zero()) return std::nullopt;
    const RealInterval value = p.evaluate(centers[i]).abs();
    const RealInterval r = degree * value / denom;
    RootEnclosure e{centers[i], RealInterval(r.upper(), r.upper(), prec), centers[i].is_real()};
    if (!e.real && certainly_lt(e.radius, abs(e.center.im())) != Tri::kTrue) return std::nullopt;
    out.push_back(std::move(e));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (out[i].may_intersect(out[j])) return std::nullopt;
    }
  }
  std::sort(out.begin(), out.end(), less_by_center);
  return out;
}

}  // namespace

ComplexInterval RootEnclosure::box() const {
  if (real) {
    return ComplexInterval(center.re() + hull(-radius, radius), RealInterval(center.precision()));
  }
  const RealInterval spread = hull(-radius, radius);
  return ComplexInterval(center.re() + spread, center.im() + spread);
}

bool RootEnclosure::may_intersect(const RootEnclosure& other) const {
  const RealInterval distance = (center - other.center).abs();
  return certainly_lt(radius + other.radius, distance) != Tri::kTrue;
}

std::vector<RootEnclosure> isolate_roots(const IntPolynomial& p, mpfr_prec_t prec, mpfr_prec_t cap) {
  if (p.degree() < 1) {
    throw Error(ErrorCode::kInvalidArgument, "root isolation needs a non-constant polynomial");
  }
  if (p.degree() == 1) {
    const Rational root = Rational(-p.coefficient(0)) / Rational(p.coefficient(1));
    const RealInterval enclosure(root, prec);
    RootEnclosure e{ComplexInterval(enclosure.midpoint()), RealInterval(prec), true};
    mpfr_sub(e.radius.lower(), enclosure.upper(), enclosure.lower(), MPFR_RNDU);
    mpfr_set(e.radius.upper(), e.radius.lower(), MPFR_RNDU);
    return {std::move(e)};
  }
  const mpfr_prec_t limit = std::max(cap, prec) + 64;
  for (mpfr_prec_t working = prec + 32;; working *= 2) {
    working = std::min(working, limit);
    auto certified = certify(p, aberth(p, working), working);
    if (certified) return std::move(*certified);
    if (working >= limit) break;
  }
  throw Error(ErrorCode::kPrecisionCapExceeded,
              "could not separate the roots of " + p.to_string() + " within " + std::to_string(cap) + " bits");
}

}  // namespace mrbound
