#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mrbound/error.hpp"
#include "mrbound/interval.hpp"
#include "oracles.hpp"

using namespace mrbound;

namespace {

RealInterval ri(long p, long q = 1, mpfr_prec_t prec = 128) {
  Rational x(p, q);
  x.canonicalize();
  return RealInterval(x, prec);
}

}  // namespace

TEST(RealInterval, RationalEnclosureContainsValue) {
  const RealInterval third = ri(1, 3);
  EXPECT_TRUE(third.contains(Rational(1, 3)));
  EXPECT_FALSE(third.is_point());
  EXPECT_TRUE(third.relative_width_at_most(120));
  EXPECT_TRUE(ri(7).is_point());
}

TEST(RealInterval, ArithmeticEnclosesExactResults) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int k = 0; k < 500; ++k) {
    long a = d(rng), b = d(rng), c = d(rng) | 1, e = d(rng) | 1;
    Rational x(a, c), y(b, e);
    x.canonicalize();
    y.canonicalize();
    const RealInterval X(x, 64), Y(y, 64);
    EXPECT_TRUE((X + Y).contains(x + y));
    EXPECT_TRUE((X - Y).contains(x - y));
    EXPECT_TRUE((X * Y).contains(x * y));
    if (y != 0) EXPECT_TRUE((X / Y).contains(x / y));
    EXPECT_TRUE(sqr(X).contains(x * x));
    EXPECT_TRUE(pow(X, 3).contains(x * x * x));
    EXPECT_TRUE(abs(X).contains(abs(x)));
  }
}

TEST(RealInterval, DivisionByIntervalContainingZeroThrows) {
  const RealInterval straddle = hull(ri(-1), ri(1));
  try {
    (void)(ri(1) / straddle);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDivisionByZero);
  }
}

TEST(RealInterval, TranscendentalsAgreeWithLongDouble) {
  const RealInterval x = ri(3, 7);
  EXPECT_LE(exp(x).lower_double(), std::exp(3.0L / 7));
  EXPECT_GE(exp(x).upper_double(), static_cast<double>(std::exp(3.0L / 7)) - 1e-15);
  EXPECT_NEAR(log(ri(3)).lower_double(), std::log(3.0), 1e-15);
  EXPECT_NEAR(sqrt(ri(5)).upper_double(), std::sqrt(5.0), 1e-15);
  EXPECT_THROW(log(ri(0)), Error);
}

TEST(RealInterval, ThreeValuedComparisons) {
  EXPECT_EQ(certainly_le(ri(1), ri(1)), Tri::kTrue);
  EXPECT_EQ(certainly_lt(ri(1), ri(1)), Tri::kFalse);
  EXPECT_EQ(certainly_lt(ri(1), ri(2)), Tri::kTrue);
  EXPECT_EQ(certainly_le(ri(3), ri(2)), Tri::kFalse);
  EXPECT_EQ(certainly_le(ri(1, 3), ri(1, 3)), Tri::kUndecided);
}

TEST(RealInterval, MinMaxHullIntersect) {
  const RealInterval a = hull(ri(1), ri(3)), b = hull(ri(2), ri(5));
  EXPECT_TRUE(min(a, b).within(1, 3));
  EXPECT_TRUE(max(a, b).within(2, 5));
  EXPECT_TRUE(intersect(a, b).within(2, 3));
  EXPECT_TRUE(hull(a, b).within(1, 5));
}

TEST(RealInterval, FormattingUsesTwelveSignificantDigits) {
  EXPECT_EQ(ri(55).to_string(), "[55,55]");
  EXPECT_EQ(format_decimal(ri(1, 3).lower()), "0.333333333333");
}

TEST(RealInterval, RelativeWidthRejectsIntervalsAroundZero) {
  EXPECT_FALSE(hull(ri(-1), ri(1)).relative_width_at_most(1));
  EXPECT_TRUE(ri(0).relative_width_at_most(60));
}

TEST(ComplexInterval, ProductAndModulus) {
  const ComplexInterval z(ri(3), ri(4));
  EXPECT_TRUE(z.abs().contains(5));
  const ComplexInterval w = z * z.conj();
  EXPECT_TRUE(w.re().contains(25));
  EXPECT_TRUE(w.im().contains(0));
  const ComplexInterval q = z / z;
  EXPECT_TRUE(q.re().contains(1));
  EXPECT_TRUE(q.im().contains(0));
  EXPECT_TRUE(pow(ComplexInterval(ri(0), ri(1)), 4).re().contains(1));
}

TEST(ComplexInterval, RealValuesStayReal) {
  const ComplexInterval r(ri(2));
  EXPECT_TRUE(r.is_real());
  EXPECT_TRUE((r * r).is_real());
  EXPECT_THROW(ComplexInterval(ri(1)) / ComplexInterval(ri(0)), Error);
}
