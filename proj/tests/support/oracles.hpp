#pragma once

// Reference computations that avoid the library's algorithms: plain integer
// recurrences, brute force enumeration and long double evaluation.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

/// F_n from F_0 = 0, F_1 = 1, F_{n+1} = F_n + F_{n-1}.
inline mpz_class fibonacci(unsigned n) {
  mpz_class a = 0, b = 1;
  for (unsigned i = 0; i < n; ++i) {
    mpz_class t = a + b;
    a = b;
    b = t;
  }
  return a;
}

/// Height over Q of a reduced fraction.
inline mpz_class rational_height(const mpq_class& x) {
  mpz_class p = abs(x.get_num());
  mpz_class q = x.get_den();
  return p > q ? p : q;
}

/// All compositions of `norm` into `s` non-negative parts, generated by odometer.
inline std::vector<std::vector<std::uint64_t>> compositions(std::size_t s, std::uint64_t norm) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> c(s, 0);
  while (true) {
    std::uint64_t sum = 0;
    for (auto v : c) sum += v;
    if (sum == norm) out.push_back(c);
    std::size_t j = 0;
    while (j < s && c[j] == norm) c[j++] = 0;
    if (j == s) break;
    ++c[j];
  }
  return out;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  long double r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::uint64_t>(std::llround(r));
}

inline long double golden() { return (1.0L + std::sqrt(5.0L)) / 2.0L; }

/// Relative distance |a - b| / |b|.
inline long double rel(long double a, long double b) { return std::fabs(a - b) / std::fabs(b); }

/// Whether d*x is integral for x = a + b*sqrt(5): tests the trace 2da and the
/// norm d^2(a^2 - 5b^2) for integrality; these are the minimal polynomial
/// coefficients of d*x when b != 0.
inline bool sqrt5_integral(const mpq_class& a, const mpq_class& b, const mpz_class& d) {
  mpq_class t = 2 * d * a;
  mpq_class n = d * d * (a * a - 5 * b * b);
  if (b == 0) return mpq_class(d * a).get_den() == 1;
  return t.get_den() == 1 && n.get_den() == 1;
}

/// Least d >= 1 with d*(a + b sqrt5) integral, by linear search.
inline mpz_class sqrt5_denominator(const mpq_class& a, const mpq_class& b) {
  for (mpz_class d = 1;; ++d) {
    if (sqrt5_integral(a, b, d)) return d;
  }
}

}  // namespace oracle
