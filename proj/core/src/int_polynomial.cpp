#include "mrbound/int_polynomial.hpp"

#include <sstream>

#include "mrbound/error.hpp"

namespace mrbound {
namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPolynomial& p) {
  RatPoly out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) out.emplace_back(c);
  return out;
}

// Quotient and remainder of a / b over Q; b non-zero.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {RatPoly{}, a};
  RatPoly q(a.size() - b.size() + 1);
  const Rational& lead = b.back();
  for (std::size_t shift = a.size() - b.size() + 1; shift-- > 0;) {
    const Rational factor = a[shift + b.size() - 1] / lead;
    q[shift] = factor;
    if (factor != 0) {
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    }
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

RatPoly rat_derivative(const RatPoly& p) {
  RatPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rational(static_cast<long>(i)));
  trim(out);
  return out;
}

RatPoly rat_sub(RatPoly a, const RatPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

bool is_one(const RatPoly& p) { return p.size() == 1 && p[0] == 1; }

std::string monomial(std::size_t power, char variable) {
  std::string out(1, variable);
  if (power > 1) out += "^" + std::to_string(power);
  return out;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return *this;
  Integer g = content();
  if (lead() < 0) g = -g;
  std::vector<Integer> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), coeffs_[i].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<Integer> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return IntPolynomial(std::move(out));
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + Rational(coeffs_[k]);
  return acc;
}

ComplexInterval IntPolynomial::evaluate(const ComplexInterval& x) const {
  const mpfr_prec_t prec = x.precision();
  ComplexInterval acc(prec);
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc = acc * x + ComplexInterval(RealInterval(coeffs_[k], prec));
  }
  return acc;
}

std::string IntPolynomial::to_string(char variable) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    const Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (k == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << monomial(k, variable);
    }
    first = false;
  }
  return out.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) + b.coefficient(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Integer> out(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) - b.coefficient(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto ac = a.coefficients();
  const auto bc = b.coefficients();
  std::vector<Integer> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] += ac[i] * bc[j];
  }
  return IntPolynomial(std::move(out));
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  if (num.is_zero()) return IntPolynomial{};
  if (num.degree() < den.degree()) return std::nullopt;
  std::vector<Integer> rem(num.coefficients().begin(), num.coefficients().end());
  const auto dc = den.coefficients();
  const std::size_t shift_max = num.coefficients().size() - dc.size();
  std::vector<Integer> quot(shift_max + 1);
  for (std::size_t shift = shift_max + 1; shift-- > 0;) {
    Integer& top = rem[shift + dc.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), den.lead().get_mpz_t())) return std::nullopt;
    Integer factor;
    mpz_divexact(factor.get_mpz_t(), top.get_mpz_t(), den.lead().get_mpz_t());
    quot[shift] = factor;
    for (std::size_t i = 0; i < dc.size(); ++i) rem[shift + i] -= factor * dc[i];
  }
  for (const auto& c : rem) {
    if (c != 0) return std::nullopt;
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial primitive_from_rational(std::span<const Rational> coeffs) {
  Integer den = 1;
  for (const auto& c : coeffs) den = lcm(den, c.get_den());
  std::vector<Integer> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    Integer scaled;
    mpz_divexact(scaled.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    out.push_back(scaled * c.get_num());
  }
  return IntPolynomial(std::move(out)).primitive_part();
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  const RatPoly g = rat_gcd(to_rat(a), to_rat(b));
  return primitive_from_rational(g);
}

SquarefreeDecomposition squarefree_decomposition(const IntPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "squarefree decomposition of zero");
  SquarefreeDecomposition out;
  IntPolynomial product{1};
  if (p.degree() > 0) {
    const RatPoly f = to_rat(p);
    const RatPoly df = rat_derivative(f);
    const RatPoly b = rat_gcd(f, df);
    RatPoly c = divmod(f, b).first;
    RatPoly d = rat_sub(divmod(df, b).first, rat_derivative(c));
    unsigned multiplicity = 1;
    while (!(c.size() == 1)) {
      RatPoly a = rat_gcd(c, d);
      if (!is_one(a)) {
        IntPolynomial factor = primitive_from_rational(a);
        for (unsigned e = 0; e < multiplicity; ++e) product = product * factor;
        out.factors.emplace_back(std::move(factor), multiplicity);
      }
      c = divmod(c, a).first;
      d = rat_sub(divmod(d, a).first, rat_derivative(c));
      ++multiplicity;
    }
  }
  const auto quotient = exact_quotient(p, product);
  if (!quotient || quotient->degree() != 0) {
    throw Error(ErrorCode::kInvalidArgument, "squarefree decomposition failed to reconstruct input");
  }
  out.constant = quotient->lead();
  return out;
}

}  // namespace mrbound
