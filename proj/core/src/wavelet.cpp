#include "padicqm/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace padicqm {
namespace {

Rational dot_over_p(const KVector& k, std::span<const Rational> y, std::int64_t p) {
  Rational s(0);
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] != 0) s += Rational(k[i]) * y[i];
  }
  return s / Rational(p);
}

void check_k(const KVector& k, const PrimeParams& params) {
  if (static_cast<int>(k.size()) != params.dim()) {
    throw std::invalid_argument("k vector has wrong dimension");
  }
  bool nonzero = false;
  for (int c : k) {
    if (c < 0 || c >= params.p()) throw std::invalid_argument("k component outside F_p");
    nonzero = nonzero || c != 0;
  }
  if (!nonzero) throw std::invalid_argument("k must be nonzero");
}

void check_point(std::span<const Rational> x, const PrimeParams& params) {
  if (static_cast<int>(x.size()) != params.dim()) {
    throw std::invalid_argument("point has wrong dimension");
  }
}

long double powl_p(const PrimeParams& params, long double e) {
  return std::pow(static_cast<long double>(params.p()), e);
}

// Points y = p^r x - b, or nullopt when x lies outside the support.
bool shifted_in_unit_ball(const WaveletIndex& idx, std::span<const Rational> x,
                          const PrimeParams& params, Point& y) {
  const Rational scale = prime_power(params.p(), idx.r);
  y.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] = scale * x[i] - idx.b[i];
    if (order_of(y[i], params.p()) < Order::finite(0)) return false;
  }
  return true;
}

}  // namespace

WaveletIndex WaveletIndex::centered(int r, KVector k) {
  WaveletIndex idx;
  idx.r = r;
  idx.b.assign(k.size(), Rational(0));
  idx.k = std::move(k);
  return idx;
}

void WaveletIndex::validate(const PrimeParams& params) const {
  check_k(k, params);
  if (static_cast<int>(b.size()) != params.dim()) {
    throw std::invalid_argument("b vector has wrong dimension");
  }
  for (const auto& c : b) {
    if (c < Rational(0) || c >= Rational(1)) throw std::invalid_argument("b component outside [0,1)");
    std::int64_t d = c.den();
    while (d % params.p() == 0) d /= params.p();
    if (d != 1) throw std::invalid_argument("b component denominator is not a power of p");
  }
}

bool WaveletIndex::is_centered() const {
  return std::all_of(b.begin(), b.end(), [](const Rational& c) { return c.is_zero(); });
}

int wavelet_level(const WaveletIndex& idx) { return 1 - idx.r; }

int wavelet_support_exp(const WaveletIndex& idx, const PrimeParams& params) {
  // Center b p^-r has order ord(b) - r; the ball has radius p^r.
  Order center = order_of(idx.b, params.p());
  if (center.is_infinite()) return -idx.r;
  return std::min<int>(-idx.r, static_cast<int>(center.value()) - idx.r);
}

Cyclotomic wavelet_phase(const WaveletIndex& idx, std::span<const Rational> x,
                         const PrimeParams& params) {
  check_point(x, params);
  Point y;
  if (!shifted_in_unit_ball(idx, x, params, y)) return {};
  return Cyclotomic::root(fractional_part(dot_over_p(idx.k, y, params.p()), params.p()).turn);
}

HalfPowerAmplitude wavelet_scale(const WaveletIndex& idx, const PrimeParams& params) {
  return {params.p(), Rational(1), -idx.r * params.dim()};
}

std::complex<double> eval_wavelet(const WaveletIndex& idx, std::span<const Rational> x,
                                  const PrimeParams& params) {
  check_point(x, params);
  Point y;
  if (!shifted_in_unit_ball(idx, x, params, y)) return {0.0, 0.0};
  const double scale = wavelet_scale(idx, params).to_double();
  return scale * character(dot_over_p(idx.k, y, params.p()), params.p());
}

std::complex<double> eval_wavelet(const WaveletIndex& idx, const Rational& x,
                                  const PrimeParams& params) {
  return eval_wavelet(idx, std::span<const Rational>(&x, 1), params);
}

LocallyConstantFn wavelet_fn(const WaveletIndex& idx, const PrimeParams& params) {
  idx.validate(params);
  return {[idx, params](std::span<const Rational> x) { return eval_wavelet(idx, x, params); },
          wavelet_level(idx), wavelet_support_exp(idx, params), {}};
}

WaveletRestriction restrict_wavelet_to_well(const WaveletIndex& idx, int L,
                                            const PrimeParams& params) {
  idx.validate(params);
  const auto zero = HalfPowerAmplitude::zero(params.p());
  // Center b p^-r of the support ball.
  Point center(idx.b.size());
  for (std::size_t i = 0; i < idx.b.size(); ++i) {
    center[i] = idx.b[i] * prime_power(params.p(), -idx.r);
  }
  const Order center_order = order_of(center, params.p());
  if (idx.r <= -L) {
    // Support radius p^r <= p^-L: the support is inside the well or disjoint.
    if (center_order >= Order::finite(L)) return {RestrictionKind::Unchanged, zero};
    return {RestrictionKind::Zero, zero};
  }
  // r >= 1 - L: the well sits inside a single coset p Z_p^N of the character.
  if (center_order >= Order::finite(-idx.r)) {
    return {RestrictionKind::ConstantOnWell, wavelet_scale(idx, params)};
  }
  return {RestrictionKind::Zero, zero};
}

long double tv_eigenvalue(int r, const PrimeParams& params) {
  return powl_p(params, static_cast<long double>(1 - r) * params.alpha());
}

SpectralAction tv_apply_spectral(const WaveletIndex& idx, const PrimeParams& params) {
  idx.validate(params);
  return {idx, static_cast<double>(tv_eigenvalue(idx.r, params))};
}

std::complex<double> tv_apply_integral(const LocallyConstantFn& f, std::span<const Rational> x,
                                       const PrimeParams& params, int tail_radius,
                                       const QuadratureOptions& opts) {
  check_point(x, params);
  if (!f.support_exp) throw std::invalid_argument("tv_apply_integral: f needs a support radius");
  if (tail_radius < -*f.support_exp) {
    throw std::invalid_argument("tv_apply_integral: tail_radius " + std::to_string(tail_radius) +
                                " is smaller than the support radius exponent " +
                                std::to_string(-*f.support_exp));
  }
  if (order_of(x, params.p()) < Order::finite(-tail_radius)) {
    throw std::invalid_argument("tv_apply_integral: x lies outside the tail radius");
  }

  const long double p = static_cast<long double>(params.p());
  const long double a = params.alpha();
  const int n = params.dim();
  const std::complex<double> fx = f(x);

  // Inner shells ||y|| = p^s; for ||y|| <= p^-level, f(x - y) = f(x).
  std::complex<long double> inner{0.0L, 0.0L};
  Point shifted(x.size());
  for (int s = 1 - f.level; s <= tail_radius; ++s) {
    LocallyConstantFn diff{[&](std::span<const Rational> y) {
                             for (std::size_t i = 0; i < y.size(); ++i) shifted[i] = x[i] - y[i];
                             return f(shifted) - fx;
                           },
                           f.level, std::nullopt, {}};
    const std::complex<double> shell = integrate_sphere(diff, -s, params, opts);
    const long double decay = std::pow(p, -static_cast<long double>(s) * (a + n));
    inner += std::complex<long double>(shell.real(), shell.imag()) * decay;
  }

  // Outer shells s > tail_radius: sum_s vol(s) p^(-s(a+N)) = (1-p^-N) sum_s p^(-s a).
  const long double outer_weight = (1.0L - std::pow(p, -static_cast<long double>(n))) *
                                   std::pow(p, -(tail_radius + 1) * a) / (1.0L - std::pow(p, -a));
  const std::complex<double> jump = f.exterior_value - fx;
  std::complex<long double> total =
      inner + std::complex<long double>(jump.real(), jump.imag()) * outer_weight;

  const long double prefactor = (1.0L - std::pow(p, a)) / (1.0L - std::pow(p, -a - n));
  total *= prefactor;
  return {static_cast<double>(total.real()), static_cast<double>(total.imag())};
}

std::complex<double> tv_apply_integral(const LocallyConstantFn& f, const Rational& x,
                                       const PrimeParams& params, int tail_radius,
                                       const QuadratureOptions& opts) {
  return tv_apply_integral(f, std::span<const Rational>(&x, 1), params, tail_radius, opts);
}

double tv_ball_indicator_closed_form(const Rational& x_norm, int L, const PrimeParams& params) {
  const long double p = static_cast<long double>(params.p());
  const long double a = params.alpha();
  const long double n = params.dim();
  const long double denom = 1.0L - std::pow(p, -a - n);
  if (x_norm <= prime_power(params.p(), -L)) {
    return static_cast<double>((1.0L - std::pow(p, -n)) * std::pow(p, L * a) / denom);
  }
  const long double norm = x_norm.to_long_double();
  return static_cast<double>((1.0L - std::pow(p, a)) * std::pow(p, -L * n) /
                             (denom * std::pow(norm, a + n)));
}

Rational lemma5_I(const KVector& k, int r, const PrimeParams& params) {
  check_k(k, params);
  return prime_power(params.p(), r * params.dim()) / Rational(2);
}

Rational lemma5_J(const KVector& k, const KVector& j, int r, const PrimeParams& params) {
  check_k(k, params);
  check_k(j, params);
  if (k == j) return lemma5_I(k, r, params);
  for (std::size_t i = 0; i < k.size(); ++i) {
    if ((k[i] + j[i]) % params.p() != 0) return Rational(0);
  }
  return prime_power(params.p(), r * params.dim()) / Rational(2);
}

namespace {

Cyclotomic cos_of_frequency(const KVector& k, int r, std::span<const Rational> x,
                            const PrimeParams& params) {
  Rational arg(0);
  for (std::size_t i = 0; i < k.size(); ++i) arg += Rational(k[i]) * x[i];
  arg *= prime_power(params.p(), r - 1);
  return Cyclotomic::cos_turn(fractional_part(arg, params.p()).turn);
}

Rational exact_or_throw(const Cyclotomic& value, const PrimeParams& params, const char* who) {
  auto q = value.as_rational(params.p());
  if (!q) throw std::logic_error(std::string(who) + ": quadrature result is not rational");
  return *q;
}

}  // namespace

Rational lemma5_I_quadrature(const KVector& k, int r, const PrimeParams& params) {
  return lemma5_J_quadrature(k, k, r, params);
}

Rational lemma5_J_quadrature(const KVector& k, const KVector& j, int r,
                             const PrimeParams& params) {
  check_k(k, params);
  check_k(j, params);
  ExactLocallyConstantFn integrand{
      [&](std::span<const Rational> x) {
        return cos_of_frequency(k, r, x, params) * cos_of_frequency(j, r, x, params);
      },
      1 - r, -r};
  return exact_or_throw(integrate_ball(integrand, -r, params), params, "lemma5_J_quadrature");
}

std::vector<KVector> enumerate_Hp_plus(const PrimeParams& params) {
  const int n = params.dim();
  const int p = static_cast<int>(params.p());
  std::vector<KVector> out;
  KVector k(static_cast<std::size_t>(n), 0);
  while (true) {
    int axis = n - 1;
    while (axis >= 0) {
      if (++k[axis] < p) break;
      k[axis] = 0;
      --axis;
    }
    if (axis < 0) break;
    KVector neg(k.size());
    for (int i = 0; i < n; ++i) neg[i] = (p - k[i]) % p;
    // std::vector comparison is lexicographic.
    if (neg <= k) out.push_back(k);
  }
  return out;
}

EnergyLevel ground_energy(const PrimeParams& params) {
  const long double p = static_cast<long double>(params.p());
  const long double a = params.alpha();
  const long double n = params.dim();
  const long double value = params.mass() * (1.0L - std::pow(p, -n)) *
                            std::pow(p, params.well_exp() * a) / (1.0L - std::pow(p, -a - n));
  return {EnergyLevel::Kind::Ground, 0, value};
}

EnergyLevel excited_energy(int r, const PrimeParams& params) {
  if (r > -params.well_exp()) {
    throw std::invalid_argument("excited_energy: scale r must satisfy r <= -L");
  }
  return {EnergyLevel::Kind::Excited, r, params.mass() * tv_eigenvalue(r, params)};
}

LocallyConstantFn ground_eigenfunction(const PrimeParams& params) {
  const int L = params.well_exp();
  const double height = HalfPowerAmplitude(params.p(), Rational(1), L * params.dim()).to_double();
  const std::int64_t p = params.p();
  return {[=](std::span<const Rational> x) {
            return std::complex<double>(order_of(x, p) >= Order::finite(L) ? height : 0.0, 0.0);
          },
          L, L, {}};
}

LocallyConstantFn build_eigenfunction(int r, const std::map<KVector, double>& coeffs,
                                      const PrimeParams& params) {
  if (r > -params.well_exp()) throw std::invalid_argument("build_eigenfunction: need r <= -L");
  const auto half_set = enumerate_Hp_plus(params);
  double sum_sq = 0.0;
  for (const auto& [k, a] : coeffs) {
    if (std::find(half_set.begin(), half_set.end(), k) == half_set.end()) {
      throw std::invalid_argument("build_eigenfunction: coefficient key is not in H_p^+");
    }
    sum_sq += a * a;
  }
  if (std::abs(sum_sq - 0.5) > 1e-12) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "build_eigenfunction: sum of squared coefficients is " << sum_sq << ", expected 1/2";
    throw std::invalid_argument(msg.str());
  }

  const double scale = 2.0 * HalfPowerAmplitude(params.p(), Rational(1), -r * params.dim()).to_double();
  const std::int64_t p = params.p();
  const Rational dilation = prime_power(p, r - 1);
  return {[=](std::span<const Rational> x) {
            // Omega(||p^r x||): x in p^-r Z_p^N.
            if (order_of(x, p) < Order::finite(-r)) return std::complex<double>(0.0, 0.0);
            double sum = 0.0;
            for (const auto& [k, a] : coeffs) {
              Rational arg(0);
              for (std::size_t i = 0; i < k.size(); ++i) arg += Rational(k[i]) * x[i];
              sum += a * unit_root(fractional_part(arg * dilation, p).turn).real();
            }
            return std::complex<double>(scale * sum, 0.0);
          },
          1 - r, -r, {}};
}

}  // namespace padicqm
