#include "padicqm/schrodinger.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace padicqm {

Rational Region::volume(std::int64_t p) const {
  if (kind == Kind::Ball) return prime_power(p, -index);
  return prime_power(p, -index) * (Rational(1) - Rational(1, p));
}

bool Region::contains(const Rational& x, std::int64_t p) const {
  const Order ord = order_of(x, p);
  if (kind == Kind::Ball) return ord >= Order::finite(index);
  return ord == Order::finite(index);
}

std::string Region::label() const {
  return (kind == Kind::Sphere ? "S" : "B") + std::to_string(index);
}

std::complex<double> energy_phase(long double energy, double t) {
  constexpr long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  const long double theta = std::fmod(energy * static_cast<long double>(t), two_pi);
  return {static_cast<double>(std::cos(theta)), static_cast<double>(-std::sin(theta))};
}

long double ground_level(const PrimeParams& params) {
  return ground_energy(params.with_well_exp(0)).value;
}

long double scale_level(int m, const PrimeParams& params) {
  return excited_energy(-m, params.with_well_exp(0)).value;
}

QuantumState::QuantumState(const PrimeParams& params, RadialCoefficients radial, Rational scale,
                           std::vector<GeneralMode> general, double t)
    : params_(params),
      radial_(std::move(radial)),
      scale_(scale),
      general_(std::move(general)),
      t_(t) {
  params_.require_unit_line("QuantumState");
  if (radial_.p != params_.p()) throw std::invalid_argument("QuantumState: prime mismatch");
  if (scale_ <= Rational(0)) throw std::invalid_argument("QuantumState: scale must be positive");
  if (t_ < 0.0) throw std::invalid_argument("QuantumState: time must be nonnegative");
  const auto half_set = enumerate_Hp_plus(params_);
  for (const auto& mode : general_) {
    if (mode.m < 0) throw std::invalid_argument("QuantumState: mode scale must be >= 0");
    if (std::find(half_set.begin(), half_set.end(), KVector{mode.k}) == half_set.end()) {
      throw std::invalid_argument("QuantumState: mode frequency is not in H_p^+");
    }
  }
}

int QuantumState::top_scale() const {
  int top = radial_.max_scale;
  for (const auto& mode : general_) top = std::max(top, mode.m);
  return top;
}

std::complex<double> QuantumState::ground_coefficient() const {
  return std::sqrt(scale_.to_double()) * radial_.c0.to_double() *
         energy_phase(ground_level(params_), t_);
}

std::complex<double> QuantumState::scale_coefficient(int m) const {
  return std::sqrt(scale_.to_double()) * radial_.at(m).to_double() *
         energy_phase(scale_level(m, params_), t_);
}

QuantumState QuantumState::evolved(double dt) const { return at_time(t_ + dt); }

QuantumState QuantumState::at_time(double t) const {
  return QuantumState(params_, radial_, scale_, general_, t);
}

Rational QuantumState::radial_norm_sq() const { return scale_ * parseval_norm_sq(radial_); }

double QuantumState::norm_sq() const {
  double general_sq = 0.0;
  for (const auto& mode : general_) general_sq += 2.0 * mode.amplitude * mode.amplitude;
  return radial_norm_sq().to_double() + scale_.to_double() * general_sq;
}

QuantumState solve_cauchy(const RadialCoefficients& initial, double t, const PrimeParams& params,
                          const Rational& scale) {
  const Rational norm = scale * parseval_norm_sq(initial);
  if (!(norm == Rational(1))) {
    std::ostringstream msg;
    msg << "solve_cauchy: initial data has squared norm " << norm << ", expected 1";
    throw std::invalid_argument(msg.str());
  }
  return QuantumState(params, initial, scale, {}, t);
}

QuantumState normalized_indicator_state(const Region& region, const PrimeParams& params) {
  RadialCoefficients coeffs;
  if (region.kind == Region::Kind::Sphere) {
    coeffs = expand_sphere_indicator(region.index, params);
  } else {
    coeffs = expand_small_ball_indicator(region.index, params);
  }
  return solve_cauchy(coeffs, 0.0, params, Rational(1) / region.volume(params.p()));
}

std::complex<double> eval_wavefunction(const QuantumState& state, const Rational& x) {
  const std::int64_t p = state.params().p();
  const Order ord = order_of(x, p);
  if (ord < Order::finite(0)) return {0.0, 0.0};

  std::complex<double> sum = state.ground_coefficient();
  const auto& radial = state.radial();
  for (int m = 0; m <= radial.max_scale; ++m) {
    const HalfPowerAmplitude c = radial.at(m);
    if (c.is_zero()) continue;
    std::complex<double> wavelets{0.0, 0.0};
    for (int k = 1; k < p; ++k) {
      wavelets += eval_wavelet(WaveletIndex::centered(-m, {k}), x, state.params());
    }
    sum += state.scale_coefficient(m) * wavelets;
  }

  const double root_scale = std::sqrt(state.scale().to_double());
  for (const auto& mode : state.general()) {
    if (ord < Order::finite(mode.m)) continue;
    const double height = HalfPowerAmplitude(p, Rational(2), mode.m).to_double();
    const Rational arg = x * Rational(mode.k) * prime_power(p, -mode.m - 1);
    const double cosine = unit_root(fractional_part(arg, p).turn).real();
    sum += root_scale * height * mode.amplitude * cosine *
           energy_phase(scale_level(mode.m, state.params()), state.time());
  }
  return sum;
}

LocallyConstantFn density_fn(const QuantumState& state) {
  return {[state](std::span<const Rational> x) {
            return std::complex<double>(std::norm(eval_wavefunction(state, x[0])), 0.0);
          },
          state.top_scale() + 1, 0, {}};
}

double born_probability(const QuantumState& state, const Region& region,
                        const QuadratureOptions& opts) {
  if (region.index < 0) throw std::invalid_argument("born_probability: region outside the well");
  const auto density = density_fn(state);
  if (region.kind == Region::Kind::Sphere) {
    return integrate_sphere(density, region.index, state.params(), opts).real();
  }
  return integrate_ball(density, region.index, state.params(), opts).real();
}

double energy_expectation(const QuantumState& state) {
  const auto& params = state.params();
  const auto& radial = state.radial();
  long double sum = radial.c0.square().to_long_double() * ground_level(params);
  for (int m = 0; m <= radial.max_scale; ++m) {
    sum += static_cast<long double>(params.p() - 1) * radial.at(m).square().to_long_double() *
           scale_level(m, params);
  }
  for (const auto& mode : state.general()) {
    sum += 2.0L * mode.amplitude * mode.amplitude * scale_level(mode.m, params);
  }
  return static_cast<double>(sum * state.scale().to_long_double());
}

}  // namespace padicqm
