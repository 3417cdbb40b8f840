#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "padicqm/cyclotomic.hpp"
#include "padicqm/half_power.hpp"
#include "padicqm/padic.hpp"
#include "padicqm/quadrature.hpp"

namespace padicqm {

using KVector = std::vector<int>;

/// Index (r, b, k) of the wavelet
///   Psi_rbk(x) = p^(-rN/2) chi_p(p^-1 k . (p^r x - b)) Omega(||p^r x - b||_p),
/// supported on the ball b p^-r + p^-r Z_p^N.
struct WaveletIndex {
  int r = 0;
  Point b;    // components in [0,1) with p-power denominators
  KVector k;  // components in {0..p-1}, not all zero

  // b = 0 in the given dimension.
  static WaveletIndex centered(int r, KVector k);

  // Throws std::invalid_argument when an invariant does not hold.
  void validate(const PrimeParams& params) const;
  bool is_centered() const;
};

// Constancy level of Psi_rbk: it is constant on cosets of p^(1-r) Z_p^N.
int wavelet_level(const WaveletIndex& idx);
// Exponent e of the smallest centered ball p^e Z_p^N containing the support.
int wavelet_support_exp(const WaveletIndex& idx, const PrimeParams& params);

std::complex<double> eval_wavelet(const WaveletIndex& idx, std::span<const Rational> x,
                                  const PrimeParams& params);
std::complex<double> eval_wavelet(const WaveletIndex& idx, const Rational& x,
                                  const PrimeParams& params);

// chi_p(...) * Omega(...) exactly; eval_wavelet = wavelet_scale * this.
Cyclotomic wavelet_phase(const WaveletIndex& idx, std::span<const Rational> x,
                         const PrimeParams& params);
// p^(-rN/2).
HalfPowerAmplitude wavelet_scale(const WaveletIndex& idx, const PrimeParams& params);

LocallyConstantFn wavelet_fn(const WaveletIndex& idx, const PrimeParams& params);

enum class RestrictionKind { Unchanged, ConstantOnWell, Zero };

struct WaveletRestriction {
  RestrictionKind kind;
  // p^(-rN/2) for ConstantOnWell, zero otherwise.
  HalfPowerAmplitude constant;
};

// Omega(p^L ||x||) * Psi_rbk(x) classified into the three possible forms.
WaveletRestriction restrict_wavelet_to_well(const WaveletIndex& idx, int L,
                                            const PrimeParams& params);

struct SpectralAction {
  WaveletIndex index;
  double eigenvalue;  // p^((1-r) alpha)
};

// D^alpha Psi_rbk = p^((1-r) alpha) Psi_rbk.
SpectralAction tv_apply_spectral(const WaveletIndex& idx, const PrimeParams& params);
long double tv_eigenvalue(int r, const PrimeParams& params);

/// Taibleson-Vladimirov operator in hypersingular integral form,
///   D^a f(x) = (1-p^a)/(1-p^(-a-N)) * int (f(x-y) - f(x)) / ||y||^(a+N) dy,
/// evaluated exactly: shells p^(1-level) <= ||y|| <= p^tail_radius are summed
/// by residue quadrature (the integrand vanishes on smaller y), and shells
/// beyond tail_radius, where f(x-y) equals f.exterior_value, are summed as a
/// closed geometric series. f.support_exp must be set, and both the support
/// and x must lie inside p^(-tail_radius) Z_p^N.
std::complex<double> tv_apply_integral(const LocallyConstantFn& f, std::span<const Rational> x,
                                       const PrimeParams& params, int tail_radius,
                                       const QuadratureOptions& opts = {});
std::complex<double> tv_apply_integral(const LocallyConstantFn& f, const Rational& x,
                                       const PrimeParams& params, int tail_radius,
                                       const QuadratureOptions& opts = {});

// D^alpha applied to the indicator of p^L Z_p^N, at a point of norm x_norm
// (0 or a power of p). Inside the ball:
//   (1 - p^-N) p^(L alpha) / (1 - p^(-alpha-N));
// outside, where only the translated ball contributes:
//   (1 - p^alpha) p^(-LN) / ((1 - p^(-alpha-N)) ||x||^(alpha+N)),
// which is negative.
double tv_ball_indicator_closed_form(const Rational& x_norm, int L, const PrimeParams& params);

// I_{k,r} = int_{p^-r Z_p^N} cos^2(2 pi {p^(r-1) k.x}) dx = p^(rN)/2.
Rational lemma5_I(const KVector& k, int r, const PrimeParams& params);
// J_{k,j,r}: the same integral of cos(..k..) cos(..j..). Zero unless
// k + j = 0 mod p, then p^(rN)/2; for j == k it equals I_{k,r}.
Rational lemma5_J(const KVector& k, const KVector& j, int r, const PrimeParams& params);

// Exact residue-sum evaluations of the same integrals.
Rational lemma5_I_quadrature(const KVector& k, int r, const PrimeParams& params);
Rational lemma5_J_quadrature(const KVector& k, const KVector& j, int r, const PrimeParams& params);

// Nonzero k in F_p^N whose negative -k = (p - k) mod p is lexicographically
// not larger than k. Exactly one of each {k, -k} pair.
std::vector<KVector> enumerate_Hp_plus(const PrimeParams& params);

struct EnergyLevel {
  enum class Kind { Ground, Excited };
  Kind kind;
  int r;  // scale for excited levels; 0 for the ground level
  long double value;
};

EnergyLevel ground_energy(const PrimeParams& params);
// E_r = m_alpha p^((1-r) alpha), r <= -L.
EnergyLevel excited_energy(int r, const PrimeParams& params);

// p^(LN/2) Omega(p^L ||x||): the normalized ground eigenfunction.
LocallyConstantFn ground_eigenfunction(const PrimeParams& params);

// 2 p^(-rN/2) Omega(||p^r x||) sum_{k in H_p^+} A_k cos(2 pi {p^(r-1) k.x}).
// Requires r <= -L, keys in H_p^+ and sum A_k^2 = 1/2 within 1e-12.
LocallyConstantFn build_eigenfunction(int r, const std::map<KVector, double>& coeffs,
                                      const PrimeParams& params);

}  // namespace padicqm
