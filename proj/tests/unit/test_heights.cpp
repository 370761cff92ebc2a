#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "mrbound/heights.hpp"
#include "oracles.hpp"

using namespace mrbound;
using fixture::q;
using fixture::rat;

namespace {

MultiPoly sum_x1_x2() {
  MultiPoly f(q(), 2);
  f.add_term({1, 0}, rat(q(), 1));
  f.add_term({0, 1}, rat(q(), 1));
  return f;
}

MultiPoly third_x1() { return fixture::monomial(rat(q(), 1, 3), {1, 0}); }

MultiPoly one() { return fixture::monomial(rat(q(), 1), {0, 0}); }

MultiPoly half_x1_x2sq() { return fixture::monomial(rat(fixture::q_sqrt5(), 1, 2), {1, 2}); }

std::vector<LatticePoint> random_points(unsigned seed, std::size_t count, std::uint64_t max_norm) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> c(0, max_norm);
  std::vector<LatticePoint> out;
  while (out.size() < count) {
    const std::uint64_t a = c(rng), b = c(rng);
    if (a + b == 0 || a + b > max_norm) continue;
    out.push_back(LatticePoint{a, b});
  }
  return out;
}

}  // namespace

TEST(MahlerMeasure, LinearIsExact) {
  EXPECT_TRUE(mahler_measure(IntPolynomial{-3, 2}, 64).within(3, 3));
  EXPECT_TRUE(mahler_measure(IntPolynomial{7, -2}, 64).within(7, 7));
}

TEST(MahlerMeasure, GoldenPolynomial) {
  const RealInterval m = mahler_measure(IntPolynomial{-1, -1, 1}, 128);
  EXPECT_NEAR(m.lower_double(), static_cast<double>(oracle::golden()), 1e-15);
  EXPECT_TRUE(m.relative_width_at_most(100));
}

TEST(MahlerMeasure, SqrtFive) {
  const RealInterval m = mahler_measure(IntPolynomial{-5, 0, 1}, 128);
  EXPECT_TRUE(m.contains(5));
  EXPECT_TRUE(m.relative_width_at_most(100));
}

TEST(MahlerMeasure, RepeatedFactorsAndContent) {
  // 3 (2X - 5)^2 (X^2 + 1): measure 3 * 25 * 1.
  const IntPolynomial p = IntPolynomial{3} * IntPolynomial{-5, 2} * IntPolynomial{-5, 2} * IntPolynomial{1, 0, 1};
  EXPECT_TRUE(mahler_measure(p, 128).contains(75));
  EXPECT_THROW(mahler_measure(IntPolynomial{}, 64), Error);
}

TEST(FieldHeight, Examples) {
  EXPECT_TRUE(field_height(rat(q(), 3, 2), 64).within(3, 3));
  EXPECT_TRUE(field_height(rat(q(), 1), 64).within(1, 1));
  const RealInterval h = field_height(fixture::phi(), 128);
  EXPECT_NEAR(h.upper_double(), static_cast<double>(oracle::golden()), 1e-15);
  try {
    field_height(q()->zero(), 64);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroElement);
  }
}

TEST(FieldHeight, RationalInLargerFieldUsesDegreeExponent) {
  // H_K(3/2) over a quadratic field is 3^2.
  EXPECT_TRUE(field_height(rat(fixture::q_sqrt5(), 3, 2), 64).within(9, 9));
  EXPECT_TRUE(field_height(rat(fixture::q_cbrt2(), -5, 3), 64).within(125, 125));
}

TEST(FieldHeight, RationalOracle) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-1000000, 1000000);
  for (int i = 0; i < 300; ++i) {
    long p = d(rng), qd = d(rng);
    if (qd == 0) qd = 1;
    Rational x(p, qd);
    x.canonicalize();
    if (x == 0) continue;
    const RealInterval h = field_height(q()->from_rational(x), 64);
    EXPECT_TRUE(h.is_point());
    EXPECT_TRUE(h.contains(Rational(oracle::rational_height(x))));
  }
}

TEST(FinitePart, Examples) {
  EXPECT_TRUE(finite_part(fixture::phi(), 64).within(1, 1));
  EXPECT_TRUE(finite_part(rat(q(), 1, 3), 64).within(3, 3));
  EXPECT_TRUE(finite_part(rat(q(), 3, 2), 64).within(2, 2));
  EXPECT_EQ(finite_part_exact(fixture::q_sqrt5()->element({0, Rational(1, 5)})), 5);
  EXPECT_THROW(finite_part(q()->zero(), 64), Error);
}

TEST(LemmaConstants, Examples) {
  const LemmaConstants a = lemma_constants(sum_x1_x2());
  EXPECT_TRUE(a.c1.within(2, 2));
  EXPECT_EQ(a.c2, 1);
  EXPECT_TRUE(a.c.within(2, 2));
  EXPECT_EQ(a.D, 1);
  EXPECT_EQ(a.m, 1u);

  const LemmaConstants b = lemma_constants(third_x1());
  EXPECT_TRUE(b.c1.contains(Rational(1, 3)));
  EXPECT_EQ(b.c2, 3);
  EXPECT_TRUE(b.c.within(3, 3));

  const LemmaConstants c = lemma_constants(one());
  EXPECT_TRUE(c.c1.within(1, 1));
  EXPECT_EQ(c.c2, 1);
  EXPECT_TRUE(c.c.within(1, 1));
  EXPECT_EQ(c.m, 0u);

  const LemmaConstants d = lemma_constants(half_x1_x2sq());
  EXPECT_EQ(d.D, 2);
  EXPECT_EQ(d.m, 3u);
  EXPECT_EQ(d.c2, 4);
  EXPECT_TRUE(d.c.within(4, 4));

  EXPECT_THROW(lemma_constants(MultiPoly(q(), 2)), Error);
}

TEST(LemmaCheck, Examples) {
  const LemmaReport a = lemma_check(sum_x1_x2(), {LatticePoint{3, 4}});
  ASSERT_EQ(a.points.size(), 1u);
  EXPECT_EQ(a.points[0].status, LemmaStatus::kHolds);
  EXPECT_TRUE(a.points[0].height.within(7, 7));
  EXPECT_TRUE(a.points[0].bound.within(14, 14));

  const LemmaReport b = lemma_check(third_x1(), {LatticePoint{2, 0}});
  EXPECT_EQ(b.points[0].status, LemmaStatus::kHolds);
  EXPECT_TRUE(b.points[0].height.within(3, 3));

  MultiPoly diff(q(), 2);
  diff.add_term({1, 0}, rat(q(), 1));
  diff.add_term({0, 1}, rat(q(), -1));
  const LemmaReport c = lemma_check(diff, {LatticePoint{5, 5}, LatticePoint{5, 4}});
  EXPECT_EQ(c.skipped, 1u);
  EXPECT_EQ(c.points[0].status, LemmaStatus::kSkippedZero);
  EXPECT_EQ(c.holds, 1u);

  EXPECT_THROW(lemma_check(sum_x1_x2(), {LatticePoint{0, 0}}), Error);
}

TEST(LemmaCheck, RandomPointsNeverViolate) {
  const auto points = random_points(99, 500, 100);
  for (const MultiPoly& f : {sum_x1_x2(), third_x1(), one(), half_x1_x2sq()}) {
    const LemmaReport r = lemma_check(f, points);
    EXPECT_EQ(r.violations, 0u) << f.to_string();
    EXPECT_EQ(r.undecided, 0u) << f.to_string();
    for (const auto& p : r.points) {
      const bool zero = f.evaluate(p.n).is_zero();
      EXPECT_EQ(p.status == LemmaStatus::kSkippedZero, zero);
    }
  }
}

TEST(LemmaCheck, IrrationalCoefficientsInCubicField) {
  const auto k = fixture::q_cbrt2();
  MultiPoly f(k, 2);
  f.add_term({1, 1}, k->element({Rational(1, 2), Rational(1), Rational(0)}));
  f.add_term({0, 2}, k->element({Rational(0), Rational(0), Rational(-1, 3)}));
  const LemmaReport r = lemma_check(f, random_points(3, 60, 30));
  EXPECT_EQ(r.violations, 0u);
  EXPECT_EQ(r.undecided, 0u);
}
