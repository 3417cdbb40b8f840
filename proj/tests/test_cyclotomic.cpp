#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <padicqm/cyclotomic.hpp>
#include <padicqm/half_power.hpp>

#include "generators.hpp"

using namespace padicqm;

TEST(Cyclotomic, RationalConstant) {
  const Cyclotomic c(Rational(3, 4));
  EXPECT_EQ(c.as_rational(3), Rational(3, 4));
  EXPECT_FALSE(c.is_zero(3));
  EXPECT_TRUE(Cyclotomic().is_zero(5));
}

TEST(Cyclotomic, FullSumOfRootsVanishes) {
  for (std::int64_t p : {3, 5, 7}) {
    Cyclotomic s;
    for (std::int64_t k = 0; k < p; ++k) s += Cyclotomic::root(Rational(k, p));
    EXPECT_TRUE(s.is_zero(p)) << p;
  }
}

TEST(Cyclotomic, NontrivialSumsOfRootsAreMinusOne) {
  for (std::int64_t p : {3, 5, 7}) {
    Cyclotomic s;
    for (std::int64_t k = 1; k < p; ++k) s += Cyclotomic::root(Rational(k, p));
    EXPECT_EQ(s.as_rational(p), Rational(-1));
  }
  // Primitive 9th roots: sum over units mod 9 is 0.
  Cyclotomic s;
  for (std::int64_t k = 1; k < 9; ++k) {
    if (k % 3 != 0) s += Cyclotomic::root(Rational(k, 9));
  }
  EXPECT_EQ(s.as_rational(3), Rational(0));
}

TEST(Cyclotomic, SingleRootIsNotRational) {
  EXPECT_FALSE(Cyclotomic::root(Rational(1, 3)).as_rational(3).has_value());
  EXPECT_FALSE(Cyclotomic::root(Rational(2, 9)).as_rational(3).has_value());
  EXPECT_FALSE(Cyclotomic::cos_turn(Rational(1, 5)).as_rational(5).has_value());
}

TEST(Cyclotomic, CosineOfThirdIsMinusHalf) {
  EXPECT_EQ(Cyclotomic::cos_turn(Rational(1, 3)).as_rational(3), Rational(-1, 2));
  EXPECT_EQ(Cyclotomic::cos_turn(Rational(0)).as_rational(3), Rational(1));
}

TEST(Cyclotomic, ProductAndConjugate) {
  const auto w = Cyclotomic::root(Rational(1, 9));
  EXPECT_EQ((w * w.conj()).as_rational(3), Rational(1));
  const auto prod = Cyclotomic::root(Rational(4, 9)) * Cyclotomic::root(Rational(5, 9));
  EXPECT_EQ(prod.as_rational(3), Rational(1));
  const auto z = (w + Cyclotomic(Rational(2))) * Rational(3);
  const auto expected = 3.0 * (std::polar(1.0, 2.0 * std::numbers::pi / 9.0) + 2.0);
  EXPECT_LT(std::abs(z.to_complex() - expected), 1e-14);
}

TEST(Cyclotomic, WrongPrimeThrows) {
  EXPECT_THROW((void)Cyclotomic::root(Rational(1, 5)).as_rational(3), std::invalid_argument);
}

TEST(CyclotomicProperty, ComplexValueMatchesExactRationality) {
  auto rng = padicqm::testing::make_rng(20);
  for (int i = 0; i < 200; ++i) {
    // |z|^2 is real; when it is rational the two evaluations agree.
    Cyclotomic z;
    for (int t = 0; t < 4; ++t) {
      z.add_term(Rational(padicqm::testing::uniform_int(rng, 0, 26), 27),
                 Rational(padicqm::testing::uniform_int(rng, -5, 5)));
    }
    const auto w = z * z.conj();
    const auto value = w.to_complex();
    EXPECT_NEAR(value.imag(), 0.0, 1e-12);
    if (auto q = w.as_rational(3)) {
      EXPECT_NEAR(q->to_double(), value.real(), 1e-10);
    }
  }
}

TEST(HalfPower, Normalization) {
  const HalfPowerAmplitude a(3, Rational(2), 5);  // 2 * 3^(5/2) = 18 * 3^(1/2)
  EXPECT_EQ(a.mantissa(), Rational(18));
  EXPECT_EQ(a.half_exp(), 1);
  const HalfPowerAmplitude b(3, Rational(1), -3);  // 3^(-3/2) = (1/9) 3^(1/2)
  EXPECT_EQ(b.mantissa(), Rational(1, 9));
  EXPECT_EQ(b.half_exp(), 1);
  EXPECT_EQ(HalfPowerAmplitude(5, Rational(0), 7), HalfPowerAmplitude::zero(5));
}

TEST(HalfPower, ExactSquaresAndProducts) {
  // 2 * 3^(-5/2) = (2/27) 3^(1/2)
  const HalfPowerAmplitude x(3, Rational(2), -5);
  EXPECT_EQ(x, HalfPowerAmplitude(3, Rational(2, 27), 1));
  EXPECT_EQ(x.square(), Rational(4, 243));
  const auto product = HalfPowerAmplitude(3, Rational(1), 1) * HalfPowerAmplitude(3, Rational(1), 3);
  EXPECT_EQ(product.to_rational(), Rational(9));
  EXPECT_THROW((void)HalfPowerAmplitude(3, Rational(1), 1).to_rational(), std::domain_error);
  EXPECT_NEAR(HalfPowerAmplitude(5, Rational(1), 1).to_double(), std::sqrt(5.0), 1e-15);
}

TEST(HalfPower, SumsNeedMatchingParity) {
  const HalfPowerAmplitude a(3, Rational(1), 1);
  const HalfPowerAmplitude b(3, Rational(2), 3);
  EXPECT_EQ(a + b, HalfPowerAmplitude(3, Rational(7), 1));
  EXPECT_THROW(a + HalfPowerAmplitude(3, Rational(1)), std::domain_error);
  EXPECT_EQ(a + HalfPowerAmplitude::zero(3), a);
  EXPECT_THROW(a * HalfPowerAmplitude(5, Rational(1)), std::invalid_argument);
}

TEST(HalfPower, Str) {
  EXPECT_EQ(HalfPowerAmplitude(3, Rational(-1, 9)).str(), "-1/9");
  EXPECT_EQ(HalfPowerAmplitude(3, Rational(2, 27), 1).str(), "2/27*3^(1/2)");
}
