#include "padicqm/half_power.hpp"

#include <cmath>
#include <stdexcept>

#include "padicqm/padic.hpp"

namespace padicqm {

HalfPowerAmplitude::HalfPowerAmplitude(std::int64_t p, const Rational& mantissa, int half_exp)
    : p_(p), mantissa_(mantissa), half_exp_(0) {
  if (mantissa_.is_zero()) return;
  // floor(half_exp / 2) moves into the mantissa.
  int whole = half_exp >= 0 ? half_exp / 2 : -((-half_exp + 1) / 2);
  mantissa_ *= prime_power(p_, whole);
  half_exp_ = half_exp - 2 * whole;
}

Rational HalfPowerAmplitude::to_rational() const {
  if (half_exp_ != 0) throw std::domain_error("HalfPowerAmplitude: value is irrational");
  return mantissa_;
}

double HalfPowerAmplitude::to_double() const { return static_cast<double>(to_long_double()); }

long double HalfPowerAmplitude::to_long_double() const {
  long double v = mantissa_.to_long_double();
  if (half_exp_ == 1) v *= std::sqrt(static_cast<long double>(p_));
  return v;
}

Rational HalfPowerAmplitude::square() const {
  return mantissa_ * mantissa_ * prime_power(p_, half_exp_);
}

HalfPowerAmplitude HalfPowerAmplitude::operator*(const HalfPowerAmplitude& o) const {
  if (o.p_ != p_) throw std::invalid_argument("HalfPowerAmplitude: mixed primes");
  return {p_, mantissa_ * o.mantissa_, half_exp_ + o.half_exp_};
}

HalfPowerAmplitude HalfPowerAmplitude::operator*(const Rational& s) const {
  return {p_, mantissa_ * s, half_exp_};
}

HalfPowerAmplitude HalfPowerAmplitude::operator-() const { return {p_, -mantissa_, half_exp_}; }

HalfPowerAmplitude HalfPowerAmplitude::operator+(const HalfPowerAmplitude& o) const {
  if (o.p_ != p_) throw std::invalid_argument("HalfPowerAmplitude: mixed primes");
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (half_exp_ != o.half_exp_) {
    throw std::domain_error("HalfPowerAmplitude: sum of mixed half-power parity");
  }
  return {p_, mantissa_ + o.mantissa_, half_exp_};
}

std::string HalfPowerAmplitude::str() const {
  if (half_exp_ == 0) return mantissa_.str();
  return mantissa_.str() + "*" + std::to_string(p_) + "^(1/2)";
}

}  // namespace padicqm
