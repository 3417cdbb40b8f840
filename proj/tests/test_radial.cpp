#include <gtest/gtest.h>

#include <padicqm/radial.hpp>
#include <padicqm/wavelet.hpp>

#include "generators.hpp"

using namespace padicqm;

namespace {

HalfPowerAmplitude amp(std::int64_t p, Rational mantissa, int half_exp = 0) {
  return HalfPowerAmplitude(p, mantissa, half_exp);
}

}  // namespace

TEST(SphereExpansion, Examples) {
  const PrimeParams params(3);
  const auto two = expand_sphere_indicator(2, params);
  EXPECT_EQ(two.c0, amp(3, Rational(2, 27)));
  EXPECT_EQ(two.at(0), amp(3, Rational(2, 27)));
  EXPECT_EQ(two.at(1), amp(3, Rational(2), -5));
  EXPECT_EQ(two.at(2), amp(3, Rational(-1, 9)));
  EXPECT_TRUE(two.at(3).is_zero());
  EXPECT_EQ(two.max_scale, 2);
  EXPECT_FALSE(two.truncated);

  const auto zero = expand_sphere_indicator(0, params);
  EXPECT_EQ(zero.c0, amp(3, Rational(2, 3)));
  EXPECT_EQ(zero.at(0), amp(3, Rational(-1, 3)));
  EXPECT_TRUE(zero.at(1).is_zero());
}

TEST(SmallBallExpansion, Examples) {
  const PrimeParams params(3);
  const auto two = expand_small_ball_indicator(2, params);
  EXPECT_EQ(two.c0, amp(3, Rational(1, 9)));
  EXPECT_EQ(two.at(0), amp(3, Rational(1, 9)));
  EXPECT_EQ(two.at(1), amp(3, Rational(1), -3));
  EXPECT_TRUE(two.at(2).is_zero());
  EXPECT_EQ(two.max_scale, 1);
  EXPECT_THROW(expand_small_ball_indicator(0, params), std::invalid_argument);
  EXPECT_THROW(expand_sphere_indicator(1, PrimeParams(3, 1.0, 1.0, 2)), std::invalid_argument);
}

TEST(RadialExpansion, UnitBallIsTheGroundMode) {
  const PrimeParams params(5);
  const auto coeffs = expand_radial(ball_indicator(0, params), 3, params);
  EXPECT_EQ(coeffs.c0, amp(5, Rational(1)));
  for (int m = 0; m <= 3; ++m) EXPECT_TRUE(coeffs.at(m).is_zero());
  EXPECT_TRUE(coeffs.truncated);
}

TEST(RadialExpansion, RejectsNonRadialInput) {
  const PrimeParams params(3);
  const ExactLocallyConstantFn shifted{
      [](std::span<const Rational> x) {
        return Cyclotomic(fractional_part(x[0] / Rational(3), 3).turn == Rational(1, 3)
                              ? Rational(1)
                              : Rational(0));
      },
      1, 0};
  EXPECT_THROW(expand_radial(shifted, 1, params), std::invalid_argument);
  EXPECT_THROW(expand_radial(ball_indicator(-1, params), 1, params), std::invalid_argument);
}

TEST(RadialExpansionProperty, QuadratureMatchesClosedForms) {
  for (std::int64_t p : {3, 5, 7}) {
    const PrimeParams params(p);
    const int top = 5;
    for (int j = 0; j <= top; ++j) {
      const auto by_quadrature = expand_radial(sphere_indicator(j, params), j + 1, params);
      EXPECT_TRUE(same_coefficients(by_quadrature, expand_sphere_indicator(j, params)))
          << "sphere p=" << p << " j=" << j;
    }
    for (int R0 = 1; R0 <= top; ++R0) {
      const auto by_quadrature = expand_radial(ball_indicator(R0, params), R0, params);
      EXPECT_TRUE(same_coefficients(by_quadrature, expand_small_ball_indicator(R0, params)))
          << "ball p=" << p << " R0=" << R0;
    }
  }
}

TEST(Reconstruction, Examples) {
  const PrimeParams params(3);
  const auto one = expand_sphere_indicator(1, params);
  EXPECT_NEAR(reconstruct(one, Rational(3), params), 1.0, 1e-12);
  EXPECT_NEAR(reconstruct(one, Rational(1), params), 0.0, 1e-12);
  EXPECT_NEAR(reconstruct(one, Rational(0), params), 0.0, 1e-12);
  const auto ball = expand_small_ball_indicator(2, params);
  EXPECT_NEAR(reconstruct(ball, Rational(9), params), 1.0, 1e-12);
  EXPECT_NEAR(reconstruct(ball, Rational(1), params), 0.0, 1e-12);
  EXPECT_THROW(reconstruct(ball, Rational(1, 3), params), std::invalid_argument);
}

TEST(ReconstructionProperty, PointwiseOnAllResidues) {
  for (std::int64_t p : {3, 5}) {
    const PrimeParams params(p);
    for (int j = 0; j <= 3; ++j) {
      const auto coeffs = expand_sphere_indicator(j, params);
      for (const auto& r : enumerate_ball_residues(0, coeffs.max_scale + 2, params)) {
        const Rational& x = r.rep[0];
        const double expected = order_of(x, p) == Order::finite(j) ? 1.0 : 0.0;
        EXPECT_NEAR(reconstruct(coeffs, x, params), expected, 1e-12) << "j=" << j << " x=" << x;
      }
    }
    for (int R0 = 1; R0 <= 3; ++R0) {
      const auto coeffs = expand_small_ball_indicator(R0, params);
      for (const auto& r : enumerate_ball_residues(0, coeffs.max_scale + 2, params)) {
        const Rational& x = r.rep[0];
        const double expected = order_of(x, p) >= Order::finite(R0) ? 1.0 : 0.0;
        EXPECT_NEAR(reconstruct(coeffs, x, params), expected, 1e-12) << "R0=" << R0 << " x=" << x;
      }
    }
  }
}

TEST(Parseval, SphereExample) {
  const PrimeParams params(3);
  EXPECT_EQ(parseval_norm_sq(expand_sphere_indicator(2, params)), Rational(2, 27));
}

TEST(ParsevalProperty, MatchesQuadratureNorm) {
  for (std::int64_t p : {3, 5, 7}) {
    const PrimeParams params(p);
    for (int j = 0; j <= 4; ++j) {
      const auto f = sphere_indicator(j, params);
      const auto norm = inner_product(f, f, 0, params).as_rational(p);
      ASSERT_TRUE(norm.has_value());
      EXPECT_EQ(parseval_norm_sq(expand_sphere_indicator(j, params)), *norm);
    }
    for (int R0 = 1; R0 <= 4; ++R0) {
      EXPECT_EQ(parseval_norm_sq(expand_small_ball_indicator(R0, params)), prime_power(p, -R0));
    }
  }
}

TEST(CompletenessProperty, PartitionCoefficientsAddToTheGroundMode) {
  // The spheres below R0 and the small ball partition the unit ball, so their
  // expansions add up to c0 = 1 with every wavelet coefficient cancelling.
  for (std::int64_t p : {3, 5, 7}) {
    const PrimeParams params(p);
    for (int R0 = 3; R0 <= 5; ++R0) {
      const auto ball = expand_small_ball_indicator(R0, params);
      HalfPowerAmplitude c0 = ball.c0;
      Rational volume = prime_power(p, -R0);
      for (int j = 0; j < R0; ++j) {
        const auto sphere = expand_sphere_indicator(j, params);
        c0 = c0 + sphere.c0;
        volume += parseval_norm_sq(sphere);
      }
      EXPECT_EQ(c0, amp(p, Rational(1)));
      EXPECT_EQ(volume, Rational(1));
      for (int m = 0; m < R0; ++m) {
        HalfPowerAmplitude sum = ball.at(m);
        for (int j = 0; j < R0; ++j) sum = sum + expand_sphere_indicator(j, params).at(m);
        EXPECT_TRUE(sum.is_zero()) << "p=" << p << " R0=" << R0 << " m=" << m;
      }
    }
  }
}
