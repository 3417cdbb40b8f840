#pragma once

#include <optional>
#include <vector>

#include "padicqm/half_power.hpp"
#include "padicqm/padic.hpp"
#include "padicqm/quadrature.hpp"

namespace padicqm {

/// Wavelet expansion of a radial function on the unit ball (N = 1, L = 0):
///   f = c0 Omega(|x|) + sum_m C_m sum_{k=1}^{p-1} Psi_{(-m)0k}.
/// One coefficient is stored per scale; the (p-1) copies over k are applied
/// by reconstruct() and parseval_norm_sq().
struct RadialCoefficients {
  std::int64_t p = 3;
  HalfPowerAmplitude c0{3, Rational(0)};
  std::vector<HalfPowerAmplitude> per_scale;  // index m = 0..max_scale
  int max_scale = -1;
  // True when coefficients beyond max_scale were not computed (expansions
  // cut at a caller-supplied scale), false when they are known to vanish.
  bool truncated = false;

  // C_m, zero beyond max_scale.
  HalfPowerAmplitude at(int m) const;
};

// Exact equality of every coefficient, missing scales counting as zero.
bool same_coefficients(const RadialCoefficients& a, const RadialCoefficients& b);

// Indicator of the sphere |x| = p^-j.
RadialCoefficients expand_sphere_indicator(int j, const PrimeParams& params);
// Indicator of the ball p^R0 Z_p, R0 >= 1.
RadialCoefficients expand_small_ball_indicator(int R0, const PrimeParams& params);

// Expansion by exact quadrature against Omega and every Psi_{(-m)0k},
// m <= scale_cutoff. Throws std::invalid_argument when a coefficient depends
// on k or is not rational at its scale, i.e. the input is not radial.
RadialCoefficients expand_radial(const ExactLocallyConstantFn& f, int scale_cutoff,
                                 const PrimeParams& params, const QuadratureOptions& opts = {});

// c0 Omega(|x|) + sum_m sum_k C_m p^(m/2) Omega(p^m |x|) cos(2 pi {p^(-1-m) k x}).
// Requires |x| <= 1.
double reconstruct(const RadialCoefficients& coeffs, const Rational& x, const PrimeParams& params);

// c0^2 + (p-1) sum_m C_m^2.
Rational parseval_norm_sq(const RadialCoefficients& coeffs);

}  // namespace padicqm
