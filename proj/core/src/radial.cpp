#include "padicqm/radial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "padicqm/wavelet.hpp"

namespace padicqm {

HalfPowerAmplitude RadialCoefficients::at(int m) const {
  if (m < 0 || m >= static_cast<int>(per_scale.size())) return HalfPowerAmplitude::zero(p);
  return per_scale[static_cast<std::size_t>(m)];
}

bool same_coefficients(const RadialCoefficients& a, const RadialCoefficients& b) {
  if (a.p != b.p || !(a.c0 == b.c0)) return false;
  const int top = std::max(a.max_scale, b.max_scale);
  for (int m = 0; m <= top; ++m) {
    if (!(a.at(m) == b.at(m))) return false;
  }
  return true;
}

RadialCoefficients expand_sphere_indicator(int j, const PrimeParams& params) {
  params.require_unit_line("expand_sphere_indicator");
  if (j < 0) throw std::invalid_argument("expand_sphere_indicator: j must be >= 0");
  const std::int64_t p = params.p();
  const Rational shell = prime_power(p, -j) * (Rational(1) - Rational(1, p));
  RadialCoefficients out;
  out.p = p;
  out.c0 = HalfPowerAmplitude(p, shell);
  for (int m = 0; m < j; ++m) out.per_scale.emplace_back(p, shell, m);
  out.per_scale.emplace_back(p, Rational(-1, p), -j);
  out.max_scale = j;
  return out;
}

RadialCoefficients expand_small_ball_indicator(int R0, const PrimeParams& params) {
  params.require_unit_line("expand_small_ball_indicator");
  if (R0 < 1) throw std::invalid_argument("expand_small_ball_indicator: R0 must be >= 1");
  const std::int64_t p = params.p();
  const Rational vol = prime_power(p, -R0);
  RadialCoefficients out;
  out.p = p;
  out.c0 = HalfPowerAmplitude(p, vol);
  for (int m = 0; m < R0; ++m) out.per_scale.emplace_back(p, vol, m);
  out.max_scale = R0 - 1;
  return out;
}

RadialCoefficients expand_radial(const ExactLocallyConstantFn& f, int scale_cutoff,
                                 const PrimeParams& params, const QuadratureOptions& opts) {
  params.require_unit_line("expand_radial");
  if (f.support_exp && *f.support_exp < 0) {
    throw std::invalid_argument("expand_radial: f must be supported in the unit ball");
  }
  const std::int64_t p = params.p();
  auto rational_or_throw = [&](const Cyclotomic& value, const char* what) {
    auto q = value.as_rational(p);
    if (!q) throw std::invalid_argument(std::string("expand_radial: ") + what + " is not real");
    return *q;
  };

  RadialCoefficients out;
  out.p = p;
  out.c0 = HalfPowerAmplitude(p, rational_or_throw(integrate_ball(f, 0, params, opts), "c0"));
  out.max_scale = scale_cutoff;
  out.truncated = true;

  for (int m = 0; m <= scale_cutoff; ++m) {
    // <f, Psi> = p^(m/2) * int f conj(phase); the integral must be the same
    // rational for every k.
    std::optional<Rational> common;
    for (int k = 1; k < p; ++k) {
      const auto idx = WaveletIndex::centered(-m, {k});
      ExactLocallyConstantFn integrand{
          [&](std::span<const Rational> x) { return f(x) * wavelet_phase(idx, x, params).conj(); },
          std::max(f.level, wavelet_level(idx)), std::nullopt};
      const Rational value = rational_or_throw(integrate_ball(integrand, 0, params, opts), "C_m");
      if (common && !(*common == value)) {
        throw std::invalid_argument("expand_radial: coefficient at scale " + std::to_string(m) +
                                    " depends on k; input is not radial");
      }
      common = value;
    }
    out.per_scale.emplace_back(p, *common, m);
  }
  return out;
}

double reconstruct(const RadialCoefficients& coeffs, const Rational& x, const PrimeParams& params) {
  const std::int64_t p = params.p();
  const Order ord = order_of(x, p);
  if (ord < Order::finite(0)) throw std::invalid_argument("reconstruct: |x|_p must be <= 1");
  double sum = coeffs.c0.to_double();
  for (int m = 0; m <= coeffs.max_scale; ++m) {
    if (ord < Order::finite(m)) break;  // Omega(p^m |x|) = 0 from here on
    const HalfPowerAmplitude c = coeffs.at(m);
    if (c.is_zero()) continue;
    const double weight = (c * HalfPowerAmplitude(p, Rational(1), m)).to_double();
    const Rational dilated = x * prime_power(p, -1 - m);
    double cos_sum = 0.0;
    for (std::int64_t k = 1; k < p; ++k) {
      cos_sum += unit_root(fractional_part(dilated * Rational(k), p).turn).real();
    }
    sum += weight * cos_sum;
  }
  return sum;
}

Rational parseval_norm_sq(const RadialCoefficients& coeffs) {
  Rational sum(0);
  for (const auto& c : coeffs.per_scale) sum += c.square();
  return coeffs.c0.square() + Rational(coeffs.p - 1) * sum;
}

}  // namespace padicqm
