#include <gtest/gtest.h>

#include <cmath>

#include <padicqm/wavelet.hpp>

#include "generators.hpp"

using namespace padicqm;

TEST(Wavelet, PointValues) {
  const PrimeParams params(3);
  EXPECT_LT(std::abs(eval_wavelet(WaveletIndex::centered(0, {1}), Rational(0), params) - 1.0), 1e-15);
  // r = -1, x = 3: the character argument is 3^-1 * (3^-1 * 3) = 1/3.
  const auto v = eval_wavelet(WaveletIndex::centered(-1, {1}), Rational(3), params);
  EXPECT_NEAR(v.real(), -std::sqrt(3.0) / 2.0, 1e-15);
  EXPECT_NEAR(v.imag(), 1.5, 1e-15);
  // x = 9 lands on the trivial character.
  const auto w = eval_wavelet(WaveletIndex::centered(-1, {1}), Rational(9), params);
  EXPECT_NEAR(w.real(), std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(w.imag(), 0.0, 1e-15);
  // Outside the support.
  EXPECT_EQ(eval_wavelet(WaveletIndex::centered(-1, {1}), Rational(1), params),
            std::complex<double>(0.0, 0.0));
}

TEST(Wavelet, ShiftedSupport) {
  const PrimeParams params(3);
  WaveletIndex idx{0, {Rational(1, 3)}, {1}};
  idx.validate(params);
  EXPECT_EQ(wavelet_support_exp(idx, params), -1);
  EXPECT_EQ(eval_wavelet(idx, Rational(0), params), std::complex<double>(0.0, 0.0));
  EXPECT_NEAR(std::abs(eval_wavelet(idx, Rational(1, 3), params)), 1.0, 1e-15);
}

TEST(Wavelet, IndexValidation) {
  const PrimeParams params(3);
  EXPECT_THROW(WaveletIndex::centered(0, {0}).validate(params), std::invalid_argument);
  EXPECT_THROW(WaveletIndex::centered(0, {3}).validate(params), std::invalid_argument);
  EXPECT_THROW((WaveletIndex{0, {Rational(1, 2)}, {1}}.validate(params)), std::invalid_argument);
  EXPECT_THROW((WaveletIndex{0, {Rational(4, 3)}, {1}}.validate(params)), std::invalid_argument);
}

TEST(WaveletProperty, ConjugationFlipsFrequency) {
  auto rng = padicqm::testing::make_rng(40);
  for (std::int64_t p : {3, 5, 7}) {
    const PrimeParams params(p);
    for (int k = 1; k < p; ++k) {
      const auto a = WaveletIndex::centered(-1, {k});
      const auto b = WaveletIndex::centered(-1, {static_cast<int>(p - k)});
      for (int i = 0; i < 64; ++i) {
        const Rational x = padicqm::testing::random_padic_fraction(rng, p, 2);
        EXPECT_LT(std::abs(std::conj(eval_wavelet(a, x, params)) - eval_wavelet(b, x, params)),
                  1e-12);
      }
    }
  }
}

TEST(Wavelet, RestrictionToWell) {
  const PrimeParams params(3);
  EXPECT_EQ(restrict_wavelet_to_well(WaveletIndex::centered(-2, {1}), 0, params).kind,
            RestrictionKind::Unchanged);
  const auto c = restrict_wavelet_to_well(WaveletIndex::centered(1, {1}), 0, params);
  EXPECT_EQ(c.kind, RestrictionKind::ConstantOnWell);
  EXPECT_EQ(c.constant, HalfPowerAmplitude(3, Rational(1), -1));
  // Center b p^-r = 1/9 * 3^-1 has norm 27 > 3: support misses the well.
  const WaveletIndex far{1, {Rational(1, 9)}, {1}};
  EXPECT_EQ(restrict_wavelet_to_well(far, 0, params).kind, RestrictionKind::Zero);
  // Small support away from the well.
  const WaveletIndex off{-1, {Rational(1, 3)}, {1}};
  EXPECT_EQ(restrict_wavelet_to_well(off, 1, params).kind, RestrictionKind::Zero);
}

TEST(Wavelet, RestrictionMatchesPointwiseProduct) {
  const PrimeParams params(3);
  const int L = 1;
  for (int r : {-2, -1, 0, 1, 2}) {
    for (const Rational& b : {Rational(0), Rational(1, 3), Rational(2, 9)}) {
      const WaveletIndex idx{r, {b}, {1}};
      const auto form = restrict_wavelet_to_well(idx, L, params);
      for (std::int64_t n = 0; n < 81; ++n) {
        const Rational x = Rational(n, 9);
        const bool in_well = order_of(x, 3) >= Order::finite(L);
        const auto actual = in_well ? eval_wavelet(idx, x, params) : std::complex<double>(0.0);
        std::complex<double> predicted{0.0, 0.0};
        if (form.kind == RestrictionKind::Unchanged) predicted = eval_wavelet(idx, x, params);
        if (form.kind == RestrictionKind::ConstantOnWell && in_well) {
          predicted = form.constant.to_double();
        }
        EXPECT_LT(std::abs(actual - predicted), 1e-12) << "r=" << r << " b=" << b << " x=" << x;
      }
    }
  }
}

TEST(Wavelet, SpectralEigenvalues) {
  const PrimeParams params(3);
  EXPECT_NEAR(tv_apply_spectral(WaveletIndex::centered(0, {1}), params).eigenvalue, 3.0, 1e-15);
  EXPECT_NEAR(tv_apply_spectral(WaveletIndex::centered(-1, {1}), params).eigenvalue, 9.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(tv_eigenvalue(1, params.with_alpha(0.5))), 1.0, 1e-15);
}

TEST(TvIntegral, ConstantFunctionIsAnnihilated) {
  const PrimeParams params(3);
  const auto one = constant_fn({1.0, 0.0});
  for (int s = 0; s <= 2; ++s) {
    EXPECT_LT(std::abs(tv_apply_integral(one, Rational(1, 3), params, s + 1)), 1e-15);
  }
}

TEST(TvIntegral, UnitBallIndicator) {
  const PrimeParams params(3);
  const auto well = ball_indicator(0, params).as_complex();
  EXPECT_NEAR(tv_apply_integral(well, Rational(0), params, 0).real(), 0.75, 1e-12);
  // At |x| = 3 only the translate of the ball contributes, with a negative sign.
  EXPECT_NEAR(tv_apply_integral(well, Rational(1, 3), params, 1).real(), -0.25, 1e-12);
  EXPECT_NEAR(tv_ball_indicator_closed_form(Rational(0), 0, params), 0.75, 1e-15);
  EXPECT_NEAR(tv_ball_indicator_closed_form(Rational(3), 0, params), -0.25, 1e-15);
}

TEST(TvIntegral, ResultHasZeroIntegral) {
  // D applied to Omega integrates to zero: 3/4 on Z_3 plus -1/4 * sum of
  // shell volumes 2*3^(s-1) / 3^(2s) = -3/4.
  const PrimeParams params(3);
  double exterior = 0.0;
  for (int s = 1; s < 40; ++s) {
    exterior += tv_ball_indicator_closed_form(prime_power(3, s), 0, params) * 2.0 *
                std::pow(3.0, s - 1);
  }
  EXPECT_NEAR(tv_ball_indicator_closed_form(Rational(0), 0, params) + exterior, 0.0, 1e-12);
}

TEST(TvIntegral, ClosedFormAgreementAtTwentyPoints) {
  auto rng = padicqm::testing::make_rng(41);
  for (std::int64_t p : {3, 5}) {
    for (double alpha : {0.5, 1.0, 2.0}) {
      for (int L : {0, 1}) {
        const PrimeParams params(p, alpha, 1.0, 1, L);
        const auto indicator = ball_indicator(L, params).as_complex();
        for (int i = 0; i < 20; ++i) {
          const int s = static_cast<int>(padicqm::testing::uniform_int(rng, -L - 1, 3));
          const Rational x = prime_power(p, -s) * Rational(padicqm::testing::uniform_int(rng, 1, p - 1));
          const int tail = std::max(-L, s);
          EXPECT_NEAR(tv_apply_integral(indicator, x, params, tail).real(),
                      tv_ball_indicator_closed_form(norm_of(x, p), L, params), 1e-10)
              << "p=" << p << " alpha=" << alpha << " L=" << L << " x=" << x;
        }
      }
    }
  }
}

TEST(TvIntegral, TwoDimensionalInterior) {
  const PrimeParams params(3, 1.0, 1.0, 2);
  const auto well = ball_indicator(0, params).as_complex();
  const Point origin{Rational(0), Rational(0)};
  EXPECT_NEAR(tv_apply_integral(well, origin, params, 0).real(),
              tv_ball_indicator_closed_form(Rational(0), 0, params), 1e-12);
}

TEST(TvIntegral, RejectsSmallTailRadius) {
  const PrimeParams params(3);
  const auto f = wavelet_fn(WaveletIndex::centered(-1, {1}), params);
  const auto wide = wavelet_fn(WaveletIndex::centered(1, {1}), params);
  EXPECT_THROW(tv_apply_integral(wide, Rational(0), params, 0), std::invalid_argument);
  EXPECT_NO_THROW(tv_apply_integral(wide, Rational(0), params, 1));
  LocallyConstantFn unbounded = constant_fn({1.0, 0.0});
  unbounded.support_exp.reset();
  EXPECT_THROW(tv_apply_integral(unbounded, Rational(0), params, 3), std::invalid_argument);
  EXPECT_THROW(tv_apply_integral(f, Rational(1, 9), params, 1), std::invalid_argument);
}

TEST(TvIntegralProperty, WaveletEigenRelation) {
  for (std::int64_t p : {3, 5}) {
    for (double alpha : {0.5, 1.0, 2.0}) {
      const PrimeParams params(p, alpha);
      for (int r : {0, -1, -2}) {
        for (int k = 1; k < p; ++k) {
          const auto idx = WaveletIndex::centered(r, {k});
          const auto f = wavelet_fn(idx, params);
          const double eigen = static_cast<double>(tv_eigenvalue(r, params));
          // Every level-(|r|+2) residue of the support.
          for_each_ball_residue(p, 1, -r, -r + 2, [&](std::span<const Rational> x) {
            const auto lhs = tv_apply_integral(f, x, params, -r);
            EXPECT_LT(std::abs(lhs - eigen * f(x)), 1e-9)
                << "p=" << p << " alpha=" << alpha << " r=" << r << " k=" << k << " x=" << x[0];
          });
          // And outside the support, where the wavelet vanishes.
          const Rational far = prime_power(p, r - 1);
          EXPECT_LT(std::abs(tv_apply_integral(f, far, params, 1 - r)), 1e-9);
        }
      }
    }
  }
}

TEST(CosineIntegrals, ClosedForms) {
  const PrimeParams params(3);
  EXPECT_EQ(lemma5_I({1}, -1, params), Rational(1, 6));
  EXPECT_EQ(lemma5_J({1}, {1}, 0, params), Rational(1, 2));
  EXPECT_EQ(lemma5_J({1}, {2}, 0, params), Rational(1, 2));
  const PrimeParams five(5);
  EXPECT_EQ(lemma5_J({1}, {2}, 0, five), Rational(0));
  EXPECT_THROW(lemma5_I({0}, 0, params), std::invalid_argument);
  EXPECT_THROW(lemma5_J({1}, {0}, 0, params), std::invalid_argument);
}

TEST(CosineIntegrals, QuadratureAgreesExactly) {
  for (std::int64_t p : {3, 5}) {
    const PrimeParams params(p);
    for (int r : {0, -1}) {
      for (int k = 1; k < p; ++k) {
        EXPECT_EQ(lemma5_I_quadrature({k}, r, params), lemma5_I({k}, r, params));
        for (int j = 1; j < p; ++j) {
          EXPECT_EQ(lemma5_J_quadrature({k}, {j}, r, params), lemma5_J({k}, {j}, r, params))
              << "p=" << p << " r=" << r << " k=" << k << " j=" << j;
        }
      }
    }
  }
  const PrimeParams plane(3, 1.0, 1.0, 2);
  EXPECT_EQ(lemma5_J_quadrature({1, 2}, {2, 1}, 0, plane), Rational(1, 2));
  EXPECT_EQ(lemma5_J_quadrature({1, 2}, {1, 1}, 0, plane), Rational(0));
}

TEST(HalfSet, Examples) {
  EXPECT_EQ(enumerate_Hp_plus(PrimeParams(3)), (std::vector<KVector>{{2}}));
  EXPECT_EQ(enumerate_Hp_plus(PrimeParams(5)), (std::vector<KVector>{{3}, {4}}));
  const auto plane = enumerate_Hp_plus(PrimeParams(3, 1.0, 1.0, 2));
  EXPECT_EQ(plane.size(), 4u);
}

TEST(HalfSet, PicksOneOfEachPair) {
  for (std::int64_t p : {3, 5, 7}) {
    for (int dim : {1, 2}) {
      const PrimeParams params(p, 1.0, 1.0, dim);
      const auto half = enumerate_Hp_plus(params);
      EXPECT_EQ(static_cast<std::int64_t>(half.size()), (int_power(p, dim) - 1) / 2);
      for (const auto& a : half) {
        for (const auto& b : half) {
          bool opposite = true;
          for (int i = 0; i < dim; ++i) opposite = opposite && (a[i] + b[i]) % p == 0;
          EXPECT_FALSE(opposite);
        }
      }
    }
  }
}

TEST(Energies, ValuesAndOrdering) {
  const PrimeParams params(3);
  EXPECT_NEAR(static_cast<double>(ground_energy(params).value), 0.75, 1e-15);
  EXPECT_NEAR(static_cast<double>(excited_energy(0, params).value), 3.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(excited_energy(-1, params).value), 9.0, 1e-15);
  // A smaller well raises the ground level by p^(L alpha).
  EXPECT_NEAR(static_cast<double>(ground_energy(PrimeParams(3, 1.0, 1.0, 1, 1)).value), 2.25,
              1e-15);
  EXPECT_THROW(excited_energy(1, params), std::invalid_argument);
  for (std::int64_t p : {3, 5, 7}) {
    for (double alpha : {0.5, 1.0, 2.0}) {
      for (int L : {-1, 0, 2}) {
        const PrimeParams q(p, alpha, 2.0, 1, L);
        long double previous = ground_energy(q).value;
        for (int r = -L; r >= -L - 4; --r) {
          const long double e = excited_energy(r, q).value;
          EXPECT_GT(e, previous);
          previous = e;
        }
      }
    }
  }
}

TEST(Eigenfunctions, GroundStateIsNormalized) {
  for (int L : {0, 1, 2}) {
    const PrimeParams params(3, 1.0, 1.0, 1, L);
    const auto ground = ground_eigenfunction(params);
    EXPECT_NEAR(inner_product(ground, ground, -1, params).real(), 1.0, 1e-14);
  }
}

TEST(Eigenfunctions, SingleFrequency) {
  const PrimeParams params(3);
  const auto phi = build_eigenfunction(0, {{{2}, 1.0 / std::sqrt(2.0)}}, params);
  EXPECT_NEAR(inner_product(phi, phi, 0, params).real(), 1.0, 1e-12);
  EXPECT_THROW(build_eigenfunction(0, {{{2}, 0.6}}, params), std::invalid_argument);
  EXPECT_THROW(build_eigenfunction(0, {{{1}, 1.0 / std::sqrt(2.0)}}, params),
               std::invalid_argument);
  EXPECT_THROW(build_eigenfunction(1, {{{2}, 1.0 / std::sqrt(2.0)}}, params),
               std::invalid_argument);
}

TEST(EigenfunctionsProperty, EvenNormalizedAndEigen) {
  auto rng = padicqm::testing::make_rng(42);
  for (std::int64_t p : {5, 7}) {
    const PrimeParams params(p, 1.5, 2.0);
    const auto half = enumerate_Hp_plus(params);
    for (int r : {0, -1}) {
      // Random unit direction scaled to sum A^2 = 1/2.
      std::map<KVector, double> coeffs;
      double sum_sq = 0.0;
      for (const auto& k : half) {
        const double a = std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
        coeffs[k] = a;
        sum_sq += a * a;
      }
      for (auto& [k, a] : coeffs) a /= std::sqrt(2.0 * sum_sq);
      const auto phi = build_eigenfunction(r, coeffs, params);
      EXPECT_NEAR(inner_product(phi, phi, -r, params).real(), 1.0, 1e-12);

      const double eigen = static_cast<double>(excited_energy(r, params).value / params.mass());
      for (int i = 0; i < 64; ++i) {
        const Rational x = padicqm::testing::random_ball_point(rng, p, -r, 3);
        EXPECT_NEAR(phi(x).real(), phi(-x).real(), 1e-12);
        EXPECT_NEAR(phi(x).imag(), 0.0, 1e-15);
        if (i < 8) {
          EXPECT_LT(std::abs(tv_apply_integral(phi, x, params, -r) - eigen * phi(x)), 1e-9);
        }
      }
    }
  }
}
