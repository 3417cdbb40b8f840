#pragma once

#include <complex>
#include <string>
#include <vector>

#include "padicqm/radial.hpp"
#include "padicqm/wavelet.hpp"

namespace padicqm {

/// A region of the unit ball: the sphere |x| = p^-index or the ball
/// p^index Z_p.
struct Region {
  enum class Kind { Sphere, Ball };
  Kind kind = Kind::Sphere;
  int index = 0;

  static Region sphere(int j) { return {Kind::Sphere, j}; }
  static Region ball(int e) { return {Kind::Ball, e}; }

  Rational volume(std::int64_t p) const;
  bool contains(const Rational& x, std::int64_t p) const;
  // "S<j>" or "B<e>".
  std::string label() const;

  friend bool operator==(const Region&, const Region&) = default;
};

// exp(-i E t), with E t reduced modulo 2 pi in extended precision first.
std::complex<double> energy_phase(long double energy, double t);

// Ground level and excited levels E_m = m_alpha p^((1+m) alpha) of the unit
// well (scale r = -m).
long double ground_level(const PrimeParams& params);
long double scale_level(int m, const PrimeParams& params);

/// Even state in the well p^0 Z_p at time t:
///   Psi(x,t) = sqrt(scale) [ c0 e_gnd Omega(|x|)
///              + sum_m C_m e_m sum_{k=1}^{p-1} Psi_{(-m)0k}(x)
///              + sum_(k,m) 2 p^(m/2) A_km e_m Omega(p^m |x|) cos(2 pi {p^(-m-1) k x}) ]
/// with e = exp(-i E t). The radial part carries exact amplitudes; the
/// general part holds real A_km for k in H_p^+.
class QuantumState {
 public:
  struct GeneralMode {
    int k;
    int m;
    double amplitude;
  };

  QuantumState(const PrimeParams& params, RadialCoefficients radial, Rational scale = Rational(1),
               std::vector<GeneralMode> general = {}, double t = 0.0);

  const PrimeParams& params() const { return params_; }
  const RadialCoefficients& radial() const { return radial_; }
  const std::vector<GeneralMode>& general() const { return general_; }
  const Rational& scale() const { return scale_; }
  double time() const { return t_; }
  // Largest scale carrying a mode.
  int top_scale() const;

  // Time-dependent coefficients: sqrt(scale) c0 e_gnd and sqrt(scale) C_m e_m.
  std::complex<double> ground_coefficient() const;
  std::complex<double> scale_coefficient(int m) const;

  QuantumState evolved(double dt) const;
  QuantumState at_time(double t) const;

  // L2 norm squared from the coefficients (time independent).
  double norm_sq() const;
  // Exact for purely radial states.
  Rational radial_norm_sq() const;

 private:
  PrimeParams params_;
  RadialCoefficients radial_;
  Rational scale_;
  std::vector<GeneralMode> general_;
  double t_;
};

// Unique solution with the given even initial data, evaluated at time t.
// The initial data must satisfy scale * Parseval == 1 exactly.
QuantumState solve_cauchy(const RadialCoefficients& initial, double t, const PrimeParams& params,
                          const Rational& scale = Rational(1));

// Normalized indicator 1_region / sqrt(vol(region)) at t = 0, using the
// closed-form expansions.
QuantumState normalized_indicator_state(const Region& region, const PrimeParams& params);

// Psi(x, t); zero outside the well. The k-sum is evaluated term by term with
// the additive character rather than through its closed form.
std::complex<double> eval_wavefunction(const QuantumState& state, const Rational& x);

// LocallyConstantFn view of |Psi(., t)|^2 restricted to the well.
LocallyConstantFn density_fn(const QuantumState& state);

// int_region |Psi(x,t)|^2 dx by residue quadrature of the density.
double born_probability(const QuantumState& state, const Region& region,
                        const QuadratureOptions& opts = {});

// <Psi, H Psi> computed spectrally.
double energy_expectation(const QuantumState& state);

}  // namespace padicqm
