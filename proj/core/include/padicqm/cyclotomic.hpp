#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>

#include "padicqm/rational.hpp"

namespace padicqm {

/// Exact element of the cyclotomic field Q(mu_{p^infinity}), stored as a
/// finite sum  sum_i c_i exp(2 pi i t_i)  with rational coefficients c_i and
/// rational turns t_i in [0,1). Every character value, cosine of a
/// fractional part, and residue-sum of such integrands lives here, which lets
/// quadrature produce exact answers.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  explicit Cyclotomic(const Rational& constant);

  static Cyclotomic root(const Rational& turn);
  // cos(2 pi turn) = (root(turn) + root(-turn)) / 2.
  static Cyclotomic cos_turn(const Rational& turn);

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& s);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
  friend Cyclotomic operator*(const Rational& s, Cyclotomic a) { return a *= s; }

  // Adds coeff * exp(2 pi i turn).
  void add_term(const Rational& turn, const Rational& coeff);

  Cyclotomic conj() const;
  std::complex<double> to_complex() const;

  // The rational value of this element if it is rational, nullopt otherwise.
  // All turns must have p-power denominators. The decision is exact: the
  // sum is reduced to the basis {zeta^c omega^i} of Q(zeta_{p^D}) where
  // omega = zeta^{p^{D-1}} is a primitive p-th root of unity.
  std::optional<Rational> as_rational(std::int64_t p) const;

  // True when the element is exactly zero in the field.
  bool is_zero(std::int64_t p) const;

  const std::map<Rational, Rational>& terms() const { return terms_; }

 private:
  std::map<Rational, Rational> terms_;  // turn in [0,1) -> coefficient
};

}  // namespace padicqm
