#include <algorithm>
#include <cstdint>
#include <vector>

#include "mrbound/number_field.hpp"

namespace mrbound {
namespace {

// Dense polynomials over F_p, lowest degree first, no trailing zeros.
using PolyP = std::vector<std::uint64_t>;

constexpr int kMaxSubsetSearchDegree = 20;

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const PolyP& a) { return static_cast<int>(a.size()) - 1; }

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

PolyP rem(PolyP a, const PolyP& b, std::uint64_t p) {
  trim(a);
  const std::uint64_t inv_lead = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = a.back() * inv_lead % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - factor * b[i] % p) % p;
    trim(a);
  }
  return a;
}

PolyP quotient(PolyP a, const PolyP& b, std::uint64_t p) {
  const std::uint64_t inv_lead = inv_mod(b.back(), p);
  if (a.size() < b.size()) return {};
  PolyP q(a.size() - b.size() + 1, 0);
  for (std::size_t shift = q.size(); shift-- > 0;) {
    const std::uint64_t factor = a[shift + b.size() - 1] * inv_lead % p;
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - factor * b[i] % p) % p;
  }
  trim(q);
  return q;
}

PolyP mul_mod(const PolyP& a, const PolyP& b, const PolyP& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PolyP out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return rem(std::move(out), m, p);
}

PolyP pow_mod(PolyP base, std::uint64_t e, const PolyP& m, std::uint64_t p) {
  PolyP result{1};
  base = rem(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m, p);
    base = mul_mod(base, base, m, p);
    e >>= 1;
  }
  return result;
}

PolyP gcd_p(PolyP a, PolyP b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyP r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

PolyP derivative_p(const PolyP& a, std::uint64_t p) {
  PolyP out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * (i % p) % p);
  trim(out);
  return out;
}

PolyP sub_p(PolyP a, const PolyP& b, std::uint64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

// Degrees of the irreducible factors of f mod p, or empty when f mod p is
// not squarefree (the prime is then unusable).
std::vector<int> factor_degrees_mod(const IntPolynomial& f, std::uint64_t p) {
  PolyP g;
  for (const auto& c : f.coefficients()) {
    g.push_back(mpz_fdiv_ui(c.get_mpz_t(), static_cast<unsigned long>(p)));
  }
  trim(g);
  if (deg(g) != f.degree()) return {};
  if (deg(gcd_p(g, derivative_p(g, p), p)) > 0) return {};
  std::vector<int> degrees;
  const PolyP x{0, 1};
  PolyP h = rem(x, g, p);
  for (int i = 1; 2 * i <= deg(g); ++i) {
    h = pow_mod(h, p, g, p);
    const PolyP d = gcd_p(g, sub_p(h, x, p), p);
    if (deg(d) > 0) {
      for (int k = 0; k < deg(d) / i; ++k) degrees.push_back(i);
      g = quotient(g, d, p);
      h = rem(h, g, p);
    }
  }
  if (deg(g) > 0) degrees.push_back(deg(g));
  return degrees;
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Proper factor degrees d (1 <= d < D) not excluded by any mod-p pattern.
std::vector<bool> admissible_degrees(const IntPolynomial& f) {
  const int n = f.degree();
  std::vector<bool> allowed(static_cast<std::size_t>(n + 1), true);
  allowed[0] = false;
  allowed[static_cast<std::size_t>(n)] = false;
  for (unsigned p = 2; p <= 200; ++p) {
    if (!is_prime(p)) continue;
    const std::vector<int> degrees = factor_degrees_mod(f, p);
    if (degrees.empty()) continue;
    std::vector<bool> sums(static_cast<std::size_t>(n + 1), false);
    sums[0] = true;
    for (int d : degrees) {
      for (int s = n; s >= d; --s) {
        if (sums[static_cast<std::size_t>(s - d)]) sums[static_cast<std::size_t>(s)] = true;
      }
    }
    for (int d = 1; d < n; ++d) {
      if (!sums[static_cast<std::size_t>(d)]) allowed[static_cast<std::size_t>(d)] = false;
    }
  }
  return allowed;
}

enum class SubsetOutcome { kRejected, kCandidate, kAmbiguous };

// Expands prod_{r in subset} (X - r) and tries to pin every coefficient to a
// unique integer.
SubsetOutcome subset_candidate(const std::vector<ComplexInterval>& roots, const std::vector<int>& subset,
                               mpfr_prec_t prec, IntPolynomial& candidate) {
  std::vector<ComplexInterval> coeffs{ComplexInterval(RealInterval(1L, prec))};
  for (int idx : subset) {
    std::vector<ComplexInterval> next(coeffs.size() + 1, ComplexInterval(prec));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] = next[i + 1] + coeffs[i];
      next[i] = next[i] - coeffs[i] * roots[static_cast<std::size_t>(idx)];
    }
    coeffs = std::move(next);
  }
  bool ambiguous = false;
  std::vector<Integer> ints;
  for (const auto& c : coeffs) {
    if (!c.im().contains_zero()) return SubsetOutcome::kRejected;
    Integer lo_ceil, hi_floor;
    mpfr_get_z(lo_ceil.get_mpz_t(), c.re().lower(), MPFR_RNDU);
    mpfr_get_z(hi_floor.get_mpz_t(), c.re().upper(), MPFR_RNDD);
    if (lo_ceil > hi_floor) return SubsetOutcome::kRejected;
    if (lo_ceil != hi_floor) ambiguous = true;
    ints.push_back(lo_ceil);
  }
  if (ambiguous) return SubsetOutcome::kAmbiguous;
  candidate = IntPolynomial(std::move(ints));
  return SubsetOutcome::kCandidate;
}

bool next_combination(std::vector<int>& subset, int n) {
  const int k = static_cast<int>(subset.size());
  for (int i = k - 1; i >= 0; --i) {
    if (subset[static_cast<std::size_t>(i)] < n - k + i) {
      ++subset[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<IntPolynomial> find_factorization(const IntPolynomial& p, mpfr_prec_t prec) {
  const int n = p.degree();
  if (n <= 1) return {};
  const std::vector<bool> allowed = admissible_degrees(p);
  if (std::none_of(allowed.begin(), allowed.end(), [](bool b) { return b; })) return {};
  if (n > kMaxSubsetSearchDegree) {
    throw NotIrreducibleError("cannot certify irreducibility of " + p.to_string() +
                                  " (degree above the exhaustive search limit); use a smaller degree",
                              {});
  }
  for (mpfr_prec_t working = std::max<mpfr_prec_t>(prec, 64);; working *= 2) {
    std::vector<ComplexInterval> roots;
    for (const auto& e : isolate_roots(p, working)) roots.push_back(e.box());
    bool ambiguous = false;
    for (int d = 1; 2 * d <= n; ++d) {
      if (!allowed[static_cast<std::size_t>(d)]) continue;
      std::vector<int> subset(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i) subset[static_cast<std::size_t>(i)] = i;
      do {
        IntPolynomial candidate;
        switch (subset_candidate(roots, subset, working, candidate)) {
          case SubsetOutcome::kRejected:
            break;
          case SubsetOutcome::kAmbiguous:
            ambiguous = true;
            break;
          case SubsetOutcome::kCandidate:
            if (auto cofactor = exact_quotient(p, candidate)) return {candidate, *cofactor};
            break;
        }
      } while (next_combination(subset, n));
    }
    if (!ambiguous) return {};
    if (working >= kPrecisionCap) break;
  }
  throw NotIrreducibleError("cannot certify irreducibility of " + p.to_string() + " within the precision cap", {});
}

}  // namespace mrbound
