#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "mrbound/heights.hpp"

using namespace mrbound;

namespace {

class RandomElements {
 public:
  explicit RandomElements(unsigned seed) : rng_(seed) {}

  FieldElement operator()(const std::shared_ptr<const NumberField>& k) {
    std::uniform_int_distribution<long> num(-20, 20), den(1, 6);
    std::vector<Rational> c;
    for (int i = 0; i < k->degree(); ++i) c.emplace_back(num(rng_), den(rng_));
    for (auto& r : c) r.canonicalize();
    return k->element(std::move(c));
  }

  FieldElement nonzero(const std::shared_ptr<const NumberField>& k) {
    for (;;) {
      FieldElement x = (*this)(k);
      if (!x.is_zero()) return x;
    }
  }

 private:
  std::mt19937 rng_;
};

class FieldProperties : public ::testing::TestWithParam<int> {
 protected:
  std::shared_ptr<const NumberField> field() const {
    return GetParam() == 2 ? fixture::q_sqrt5() : fixture::q_cbrt2();
  }
};

}  // namespace

TEST_P(FieldProperties, RingAxioms) {
  RandomElements gen(17);
  const auto k = field();
  for (int i = 0; i < 1000; ++i) {
    const FieldElement x = gen(k), y = gen(k), z = gen(k);
    ASSERT_EQ((x + y) * z, x * z + y * z);
    ASSERT_EQ(x * y, y * x);
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x + (-x), k->zero());
    ASSERT_EQ(x * k->one(), x);
  }
}

TEST_P(FieldProperties, InverseRoundTrip) {
  RandomElements gen(23);
  const auto k = field();
  for (int i = 0; i < 300; ++i) {
    const FieldElement x = gen.nonzero(k);
    ASSERT_EQ(x * inverse(x), k->one());
  }
}

TEST_P(FieldProperties, MinimalPolynomialVanishesAtElement) {
  RandomElements gen(29);
  const auto k = field();
  for (int i = 0; i < 200; ++i) {
    const FieldElement x = gen(k);
    const IntPolynomial p = minimal_polynomial(x);
    EXPECT_EQ(k->degree() % p.degree(), 0);
    EXPECT_EQ(p.content(), 1);
    EXPECT_GT(p.lead(), 0);
    FieldElement acc = k->zero();
    for (int j = 0; j <= p.degree(); ++j) acc = acc + Rational(p.coefficient(j)) * pow(x, j);
    ASSERT_EQ(acc, k->zero()) << x.to_string();
  }
}

TEST_P(FieldProperties, ConjugatesEncloseTraceAndNorm) {
  RandomElements gen(31);
  const auto k = field();
  for (int i = 0; i < 200; ++i) {
    const FieldElement x = gen(k);
    const auto conj = x.conjugates(128);
    ComplexInterval sum(RealInterval(0L, 128)), prod(RealInterval(1L, 128));
    for (const auto& c : conj) {
      sum = sum + c;
      prod = prod * c;
    }
    EXPECT_TRUE(sum.re().contains(field_trace(x)));
    EXPECT_TRUE(sum.im().contains(0));
    EXPECT_TRUE(prod.re().contains(field_norm(x)));
    EXPECT_TRUE(prod.im().contains(0));
  }
}

TEST_P(FieldProperties, NormIsMultiplicative) {
  RandomElements gen(37);
  const auto k = field();
  for (int i = 0; i < 200; ++i) {
    const FieldElement x = gen(k), y = gen(k);
    ASSERT_EQ(field_norm(x * y), field_norm(x) * field_norm(y));
    ASSERT_EQ(field_norm(x) == 0, x.is_zero());
  }
}

TEST_P(FieldProperties, HouseIsSubmultiplicative) {
  RandomElements gen(41);
  const auto k = field();
  for (int i = 0; i < 200; ++i) {
    const FieldElement x = gen(k), y = gen(k);
    const RealInterval lhs = house(x * y, 256);
    const RealInterval rhs = house(x, 256) * house(y, 256);
    // Equality is possible (e.g. rational factors), so compare lo(lhs) with hi(rhs).
    EXPECT_LE(mpfr_cmp(lhs.lower(), rhs.upper()), 0);
  }
}

TEST_P(FieldProperties, DenominatorMakesElementsIntegral) {
  RandomElements gen(43);
  const auto k = field();
  for (int i = 0; i < 200; ++i) {
    const FieldElement x = gen(k);
    const Integer d = denominator(x);
    ASSERT_TRUE(is_algebraic_integer(d * x));
    if (d > 1) ASSERT_FALSE(is_algebraic_integer(Integer(d - 1) * x));
  }
}

TEST_P(FieldProperties, HeightOfInverseEqualsHeight) {
  RandomElements gen(47);
  const auto k = field();
  for (int i = 0; i < 100; ++i) {
    const FieldElement x = gen.nonzero(k);
    const RealInterval a = field_height(x, 256), b = field_height(inverse(x), 256);
    EXPECT_NE(certainly_lt(a, b), Tri::kTrue);
    EXPECT_NE(certainly_lt(b, a), Tri::kTrue);
  }
}

TEST_P(FieldProperties, HeightIsSubmultiplicative) {
  RandomElements gen(53);
  const auto k = field();
  for (int i = 0; i < 100; ++i) {
    const FieldElement x = gen.nonzero(k), y = gen.nonzero(k);
    const RealInterval lhs = field_height(x * y, 256);
    const RealInterval rhs = field_height(x, 256) * field_height(y, 256);
    EXPECT_LE(mpfr_cmp(lhs.lower(), rhs.upper()), 0);
  }
}

TEST_P(FieldProperties, HeightOfPowers) {
  RandomElements gen(59);
  const auto k = field();
  for (int i = 0; i < 40; ++i) {
    const FieldElement x = gen.nonzero(k);
    const RealInterval h = field_height(x, 256);
    for (unsigned j = 1; j <= 5; ++j) {
      const RealInterval a = field_height(pow(x, j), 256), b = pow(h, j);
      EXPECT_NE(certainly_lt(a, b), Tri::kTrue);
      EXPECT_NE(certainly_lt(b, a), Tri::kTrue);
    }
  }
}

TEST_P(FieldProperties, FinitePartIsHeightOverArchimedeanPart) {
  RandomElements gen(61);
  const auto k = field();
  for (int i = 0; i < 100; ++i) {
    const FieldElement x = gen.nonzero(k);
    const RealInterval ratio = field_height(x, 256) / archimedean_part(x, 256);
    EXPECT_TRUE(ratio.contains(Rational(finite_part_exact(x)))) << x.to_string();
    EXPECT_GE(finite_part_exact(x), 1);
    if (is_algebraic_integer(x)) EXPECT_EQ(finite_part_exact(x), 1);
  }
}

INSTANTIATE_TEST_SUITE_P(QuadraticAndCubic, FieldProperties, ::testing::Values(2, 3),
                         [](const auto& info) { return info.param == 2 ? "Sqrt5" : "CubeRoot2"; });
