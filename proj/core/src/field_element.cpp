#include <algorithm>
#include <optional>

#include "mrbound/number_field.hpp"

namespace mrbound {
namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Multiplies coordinate vectors and reduces modulo the monic defining polynomial.
std::vector<Rational> multiply_reduce(std::span<const Rational> a, std::span<const Rational> b,
                                      const IntPolynomial& modulus) {
  const std::size_t n = a.size();
  std::vector<Rational> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] != 0) prod[i + j] += a[i] * b[j];
    }
  }
  for (std::size_t k = prod.size(); k-- > n;) {
    if (prod[k] == 0) continue;
    const Rational c = prod[k];
    for (std::size_t i = 0; i < n; ++i) {
      const Integer& m = modulus.coefficients()[i];
      if (m != 0) prod[k - n + i] -= c * Rational(m);
    }
    prod[k] = 0;
  }
  prod.resize(n);
  return prod;
}

// Solves A y = rhs for square or tall A with full column rank restricted to
// a consistent system; nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> rhs) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    std::swap(rhs[pivot], rhs[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
      rhs[i] -= f * rhs[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (rhs[i] != 0) return std::nullopt;
  }
  std::vector<Rational> y(cols);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) y[pivot_cols[i]] = rhs[i];
  return y;
}

Rational determinant(Matrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[c][k];
    }
  }
  return det;
}

std::vector<Integer> divisors_ascending(const Integer& n) {
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      small.push_back(d);
      Integer other = n / d;
      if (other != d) large.push_back(other);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

FieldElement::FieldElement(std::shared_ptr<const NumberField> field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.size() != static_cast<std::size_t>(field_->degree())) {
    throw Error(ErrorCode::kInvalidArgument, "coordinate vector length does not match the field degree");
  }
  for (auto& c : coords_) c.canonicalize();
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

bool FieldElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& c) { return c == 0; });
}

ComplexInterval FieldElement::embed(std::size_t place, mpfr_prec_t prec) const {
  if (is_rational()) return ComplexInterval(RealInterval(coords_[0], prec));
  const auto table = field_->embeddings(prec);
  if (place >= table->size()) throw Error(ErrorCode::kIndexOutOfRange, "embedding index out of range");
  const ComplexInterval& theta = (*table)[place].root;
  ComplexInterval acc(RealInterval(coords_.back(), prec));
  for (std::size_t k = coords_.size() - 1; k-- > 0;) {
    acc = acc * theta;
    if (coords_[k] != 0) acc = acc + ComplexInterval(RealInterval(coords_[k], prec));
  }
  return acc;
}

std::vector<ComplexInterval> FieldElement::conjugates(mpfr_prec_t prec) const {
  std::vector<ComplexInterval> out;
  const std::size_t d = static_cast<std::size_t>(field_->degree());
  out.reserve(d);
  for (std::size_t t = 0; t < d; ++t) out.push_back(embed(t, prec));
  return out;
}

std::string FieldElement::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (coords_[k] == 0) continue;
    std::string term;
    if (k == 0) {
      term = mrbound::to_string(coords_[k]);
    } else {
      const std::string power = k == 1 ? "t" : "t^" + std::to_string(k);
      term = coords_[k] == 1 ? power : coords_[k] == -1 ? "-" + power : mrbound::to_string(coords_[k]) + "*" + power;
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field().same_field(b.field()) && std::equal(a.coords().begin(), a.coords().end(), b.coords().begin());
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!a.field().same_field(b.field())) {
    throw Error(ErrorCode::kFieldMismatch, "elements belong to different number fields");
  }
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  std::vector<Rational> out(a.coords().begin(), a.coords().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coords()[i];
  return FieldElement(a.field_ptr(), std::move(out));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  std::vector<Rational> out(a.coords().begin(), a.coords().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.coords()[i];
  return FieldElement(a.field_ptr(), std::move(out));
}

FieldElement operator-(const FieldElement& a) {
  std::vector<Rational> out(a.coords().begin(), a.coords().end());
  for (auto& c : out) c = -c;
  return FieldElement(a.field_ptr(), std::move(out));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  if (a.is_rational()) return a.constant() * b;
  if (b.is_rational()) return b.constant() * a;
  return FieldElement(a.field_ptr(), multiply_reduce(a.coords(), b.coords(), a.field().minpoly()));
}

FieldElement operator*(const Rational& scalar, const FieldElement& a) {
  std::vector<Rational> out(a.coords().begin(), a.coords().end());
  for (auto& c : out) c *= scalar;
  return FieldElement(a.field_ptr(), std::move(out));
}

FieldElement operator*(const Integer& scalar, const FieldElement& a) { return Rational(scalar) * a; }

std::vector<std::vector<Rational>> multiplication_matrix(const FieldElement& x) {
  const std::size_t n = x.coords().size();
  Matrix m(n, std::vector<Rational>(n));
  FieldElement column = x;
  const FieldElement theta = x.field().generator();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) m[i][j] = column.coords()[i];
    if (j + 1 < n) column = column * theta;
  }
  return m;
}

FieldElement inverse(const FieldElement& x) {
  if (x.is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  if (x.is_rational()) return x.field().from_rational(1 / x.constant());
  std::vector<Rational> rhs(x.coords().size());
  rhs[0] = 1;
  auto y = solve(multiplication_matrix(x), std::move(rhs));
  return FieldElement(x.field_ptr(), std::move(*y));
}

FieldElement pow(const FieldElement& x, unsigned long exponent) {
  FieldElement result = x.field().one();
  FieldElement base = x;
  while (exponent > 0) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

IntPolynomial minimal_polynomial(const FieldElement& x) {
  if (x.is_rational()) {
    const Rational c = x.constant();
    return primitive_from_rational(std::vector<Rational>{-c, Rational(1)});
  }
  const std::size_t n = x.coords().size();
  std::vector<std::vector<Rational>> powers;
  const FieldElement one = x.field().one();
  powers.emplace_back(one.coords().begin(), one.coords().end());
  FieldElement current = x;
  for (std::size_t d = 1; d <= n; ++d) {
    Matrix a(n, std::vector<Rational>(d));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < d; ++j) a[i][j] = powers[j][i];
    }
    std::vector<Rational> rhs(current.coords().begin(), current.coords().end());
    if (auto c = solve(std::move(a), rhs)) {
      std::vector<Rational> poly(d + 1);
      for (std::size_t j = 0; j < d; ++j) poly[j] = -(*c)[j];
      poly[d] = 1;
      return primitive_from_rational(poly);
    }
    powers.push_back(std::move(rhs));
    current = current * x;
  }
  throw Error(ErrorCode::kInvalidArgument, "minimal polynomial degree exceeds field degree");
}

bool is_algebraic_integer(const FieldElement& x) { return minimal_polynomial(x).is_monic(); }

Integer denominator(const FieldElement& x) {
  const IntPolynomial m = minimal_polynomial(x);
  const Integer& lead = m.lead();
  const std::size_t d = static_cast<std::size_t>(m.degree());
  // t*x has minimal polynomial proportional to sum m_i t^(d-i) X^i; it is
  // integral iff lead divides every scaled lower coefficient.
  for (const Integer& t : divisors_ascending(lead)) {
    bool integral = true;
    Integer scale = 1;
    for (std::size_t i = d; i-- > 0;) {
      scale *= t;
      const Integer c = m.coefficient(i) * scale;
      if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t())) {
        integral = false;
        break;
      }
    }
    if (integral) return t;
  }
  return lead;
}

Rational field_norm(const FieldElement& x) { return determinant(multiplication_matrix(x)); }

Rational field_trace(const FieldElement& x) {
  const Matrix m = multiplication_matrix(x);
  Rational trace = 0;
  for (std::size_t i = 0; i < m.size(); ++i) trace += m[i][i];
  return trace;
}

RealInterval house(const FieldElement& x, mpfr_prec_t prec, mpfr_prec_t cap) {
  if (prec > cap) {
    throw Error(ErrorCode::kPrecisionCapExceeded, "requested " + std::to_string(prec) + " bits, cap is " +
                                                      std::to_string(cap));
  }
  if (x.is_rational()) return abs(RealInterval(x.constant(), prec));
  std::optional<RealInterval> best;
  for (const auto& c : x.conjugates(prec)) {
    RealInterval m = c.abs();
    best = best ? max(*best, m) : m;
  }
  return *best;
}

}  // namespace mrbound
