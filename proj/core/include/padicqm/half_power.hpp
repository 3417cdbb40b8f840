#pragma once

#include <cstdint>
#include <string>

#include "padicqm/rational.hpp"

namespace padicqm {

/// Exact amplitude mantissa * p^(half_exp / 2). Values are kept normalized
/// so that half_exp is 0 or 1 (or 0 for a zero mantissa); two amplitudes are
/// equal exactly when their normalized fields agree.
class HalfPowerAmplitude {
 public:
  HalfPowerAmplitude(std::int64_t p, const Rational& mantissa, int half_exp = 0);

  static HalfPowerAmplitude zero(std::int64_t p) { return {p, Rational(0), 0}; }

  std::int64_t prime() const { return p_; }
  const Rational& mantissa() const { return mantissa_; }
  int half_exp() const { return half_exp_; }
  bool is_zero() const { return mantissa_.is_zero(); }
  bool is_rational() const { return half_exp_ == 0; }

  // Throws std::domain_error when the value carries an odd half power.
  Rational to_rational() const;
  double to_double() const;
  long double to_long_double() const;

  // Always rational: mantissa^2 * p^half_exp.
  Rational square() const;

  HalfPowerAmplitude operator*(const HalfPowerAmplitude& o) const;
  HalfPowerAmplitude operator*(const Rational& s) const;
  HalfPowerAmplitude operator-() const;
  // Sum of two amplitudes with the same half-power parity.
  HalfPowerAmplitude operator+(const HalfPowerAmplitude& o) const;

  friend bool operator==(const HalfPowerAmplitude&, const HalfPowerAmplitude&) = default;

  // "mantissa*p^(e/2)" or just the mantissa when rational.
  std::string str() const;

 private:
  std::int64_t p_;
  Rational mantissa_;
  int half_exp_;
};

}  // namespace padicqm
