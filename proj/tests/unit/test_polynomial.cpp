#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "mrbound/number_field.hpp"
#include "mrbound/roots.hpp"

using namespace mrbound;

TEST(IntPolynomial, NormalizesAndReportsDegree) {
  const IntPolynomial p{-1, -1, 1, 0, 0};
  EXPECT_EQ(p.degree(), 2);
  EXPECT_TRUE(p.is_monic());
  EXPECT_EQ(p.to_string(), "X^2 - X - 1");
  EXPECT_EQ(IntPolynomial{}.degree(), -1);
  EXPECT_TRUE((IntPolynomial{0, 0}.is_zero()));
}

TEST(IntPolynomial, ArithmeticAndExactQuotient) {
  const IntPolynomial a{-2, 1}, b{2, 1};
  const IntPolynomial prod = a * b;
  EXPECT_EQ(prod, (IntPolynomial{-4, 0, 1}));
  EXPECT_EQ(*exact_quotient(prod, a), b);
  EXPECT_FALSE(exact_quotient(prod, IntPolynomial{1, 1}).has_value());
  EXPECT_EQ(prod - a * b, IntPolynomial{});
  EXPECT_EQ(a + b, (IntPolynomial{0, 2}));
}

TEST(IntPolynomial, GcdContentPrimitivePart) {
  const IntPolynomial p{-6, 0, 6};
  EXPECT_EQ(p.content(), 6);
  EXPECT_EQ(p.primitive_part(), (IntPolynomial{-1, 0, 1}));
  EXPECT_EQ(gcd(IntPolynomial{-1, 0, 1}, IntPolynomial{1, 2, 1}), (IntPolynomial{1, 1}));
  EXPECT_EQ(IntPolynomial({5, 0, -3}).primitive_part().lead(), 3);
}

TEST(IntPolynomial, SquarefreeDecomposition) {
  // 2 (X - 1)^3 (X + 2)
  const IntPolynomial l{-1, 1};
  const IntPolynomial p = IntPolynomial{2} * l * l * l * IntPolynomial{2, 1};
  const auto dec = squarefree_decomposition(p);
  EXPECT_EQ(dec.constant, 2);
  ASSERT_EQ(dec.factors.size(), 2u);
  IntPolynomial back{dec.constant.get_si()};
  for (const auto& [q, e] : dec.factors) {
    for (unsigned i = 0; i < e; ++i) back = back * q;
  }
  EXPECT_EQ(back, p);
}

TEST(IntPolynomial, EvaluateRational) {
  EXPECT_EQ(IntPolynomial({-3, 2}).evaluate(Rational(3, 2)), 0);
  EXPECT_EQ(IntPolynomial({1, 1, 1}).evaluate(Rational(2)), 7);
}

TEST(IntPolynomial, PrimitiveFromRational) {
  const std::vector<Rational> c{Rational(-3, 2), Rational(1)};
  EXPECT_EQ(primitive_from_rational(c), (IntPolynomial{-3, 2}));
}

TEST(Roots, GoldenPolynomialRootsAreRealAndOrdered) {
  const auto roots = isolate_roots(IntPolynomial{-1, -1, 1}, 128);
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_TRUE(roots[0].real);
  EXPECT_TRUE(roots[1].real);
  const long double phi = (1 + std::sqrt(5.0L)) / 2;
  EXPECT_NEAR(roots[1].box().re().lower_double(), static_cast<double>(phi), 1e-15);
  EXPECT_NEAR(roots[0].box().re().upper_double(), static_cast<double>(1 - phi), 1e-15);
}

TEST(Roots, CubeRootOfTwoHasOneRealRootAndConjugatePair) {
  const auto roots = isolate_roots(IntPolynomial{-2, 0, 0, 1}, 128);
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_TRUE(roots[0].real);
  EXPECT_FALSE(roots[1].real);
  EXPECT_FALSE(roots[2].real);
  for (const auto& r : roots) {
    const ComplexInterval c = pow(r.box(), 3);
    EXPECT_TRUE(c.re().contains(2));
    EXPECT_TRUE(c.im().contains(0));
  }
  EXPECT_LT(roots[1].box().im().upper_double(), 0);
  EXPECT_GT(roots[2].box().im().lower_double(), 0);
}

TEST(Roots, EnclosuresAreDisjointAndContainTrueRoots) {
  // Cyclotomic Phi_7: all roots on the unit circle.
  const IntPolynomial p{1, 1, 1, 1, 1, 1, 1};
  const auto roots = isolate_roots(p, 96);
  ASSERT_EQ(roots.size(), 6u);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) EXPECT_FALSE(roots[i].may_intersect(roots[j]));
  }
  for (int k = 1; k <= 6; ++k) {
    const std::complex<long double> z = std::polar(1.0L, 2 * std::acos(-1.0L) * k / 7);
    int hits = 0;
    for (const auto& r : roots) {
      const auto b = r.box();
      if (b.re().lower_double() - 1e-12 <= z.real() && z.real() <= b.re().upper_double() + 1e-12 &&
          b.im().lower_double() - 1e-12 <= z.imag() && z.imag() <= b.im().upper_double() + 1e-12) {
        ++hits;
      }
    }
    EXPECT_EQ(hits, 1);
  }
}

TEST(Roots, HigherPrecisionGivesNarrowerBoxes) {
  const IntPolynomial p{-2, 0, 0, 1};
  const auto lo = isolate_roots(p, 64);
  const auto hi = isolate_roots(p, 512);
  EXPECT_TRUE(hi[0].box().re().relative_width_at_most(400));
  EXPECT_FALSE(lo[0].box().re().relative_width_at_most(400));
}

TEST(Roots, LinearPolynomialIsExact) {
  const auto roots = isolate_roots(IntPolynomial{-3, 2}, 64);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_TRUE(roots[0].box().re().contains(Rational(3, 2)));
}

TEST(Irreducibility, FindsFactorizations) {
  const auto f = find_factorization(IntPolynomial{-4, 0, 1}, 128);
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0] * f[1], (IntPolynomial{-4, 0, 1}));
  // (X^2 + 1)(X^2 - 2): no rational roots, factors of degree two.
  const IntPolynomial p = IntPolynomial{1, 0, 1} * IntPolynomial{-2, 0, 1};
  const auto g = find_factorization(p, 128);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0] * g[1], p);
  EXPECT_EQ(g[0].degree(), 2);
}

TEST(Irreducibility, CertifiesIrreduciblePolynomials) {
  EXPECT_TRUE(find_factorization(IntPolynomial{-5, 0, 1}, 128).empty());
  EXPECT_TRUE(find_factorization(IntPolynomial{-2, 0, 0, 1}, 128).empty());
  // X^4 + 1 is reducible modulo every prime but irreducible over Q.
  EXPECT_TRUE(find_factorization(IntPolynomial{1, 0, 0, 0, 1}, 128).empty());
  EXPECT_TRUE(find_factorization(IntPolynomial{-1, -1, 0, 0, 0, 1}, 128).empty());
}
