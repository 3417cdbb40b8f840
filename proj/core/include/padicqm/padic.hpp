#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "padicqm/rational.hpp"

namespace padicqm {

using Point = std::vector<Rational>;

bool is_prime(std::int64_t n);

// p^e as an exact rational; e may be negative.
Rational prime_power(std::int64_t p, int e);

// p^e for e >= 0 as an integer, throwing on overflow.
std::int64_t int_power(std::int64_t p, int e);

/// Global model parameters: the prime p, the operator exponent alpha, the
/// mass constant m_alpha, the dimension N and the well exponent L (the well
/// is the ball p^L Z_p^N).
class PrimeParams {
 public:
  explicit PrimeParams(std::int64_t p, double alpha = 1.0, double mass = 1.0, int dim = 1,
                       int well_exp = 0);

  std::int64_t p() const { return p_; }
  double alpha() const { return alpha_; }
  double mass() const { return mass_; }
  int dim() const { return dim_; }
  int well_exp() const { return well_exp_; }

  PrimeParams with_alpha(double alpha) const;
  PrimeParams with_dim(int dim) const;
  PrimeParams with_well_exp(int well_exp) const;

  // Throws std::invalid_argument unless N == 1 and L == 0, the setting of
  // the walk constructions.
  void require_unit_line(const char* who) const;

 private:
  std::int64_t p_;
  double alpha_;
  double mass_;
  int dim_;
  int well_exp_;
};

/// p-adic order: an integer, or +infinity for zero.
class Order {
 public:
  static Order infinity() { return Order(true, 0); }
  static Order finite(std::int64_t v) { return Order(false, v); }

  bool is_infinite() const { return infinite_; }
  // Throws std::logic_error for the infinite order.
  std::int64_t value() const;

  friend bool operator==(const Order&, const Order&) = default;
  friend std::strong_ordering operator<=>(const Order& a, const Order& b);

  std::string str() const;

 private:
  Order(bool infinite, std::int64_t v) : infinite_(infinite), value_(v) {}
  bool infinite_;
  std::int64_t value_;
};

struct OrderNorm {
  Order order;
  Rational norm;
};

OrderNorm order_and_norm(const Rational& x, std::int64_t p);
Order order_of(const Rational& x, std::int64_t p);
Rational norm_of(const Rational& x, std::int64_t p);

// Max-norm order / norm of a vector: min over components of the order.
Order order_of(std::span<const Rational> x, std::int64_t p);
Rational norm_of(std::span<const Rational> x, std::int64_t p);

/// Character exponent {x}_p: a rational in [0,1) whose denominator is a power
/// of p. The character value is exp(2 pi i turn).
struct UnitTurn {
  Rational turn;

  std::complex<double> value() const;
  friend bool operator==(const UnitTurn&, const UnitTurn&) = default;
};

UnitTurn fractional_part(const Rational& x, std::int64_t p);

// exp(2 pi i x) for an exact rational angle measured in turns. The angle is
// reduced exactly before the single floating-point trig evaluation.
std::complex<double> unit_root(const Rational& turn);

// The additive character chi_p(x) = exp(2 pi i {x}_p).
std::complex<double> character(const Rational& x, std::int64_t p);

/// An element of Q embedded in Q_p, kept as p^order * unit with the unit's
/// numerator and denominator coprime to p.
class PAdicScalar {
 public:
  PAdicScalar(const Rational& value, std::int64_t p);

  const Rational& value() const { return value_; }
  std::int64_t prime() const { return p_; }
  Order order() const { return order_; }
  Rational norm() const;
  // value * p^(-order); zero for the zero scalar.
  Rational unit() const;
  UnitTurn fractional_part() const;

  PAdicScalar operator+(const PAdicScalar& o) const;
  PAdicScalar operator-(const PAdicScalar& o) const;
  PAdicScalar operator*(const PAdicScalar& o) const;
  PAdicScalar operator-() const;

 private:
  void check_same_prime(const PAdicScalar& o) const;

  Rational value_;
  std::int64_t p_;
  Order order_;
};

/// A coset rep + p^level Z_p^N used as an exact quadrature node.
struct PAdicResidue {
  int level = 0;
  Point rep;
  Rational haar_weight;
};

// Number of level-M residues of the ball p^ball_exp Z_p^N; throws on overflow.
std::uint64_t ball_residue_count(std::int64_t p, int dim, int ball_exp, int level);
std::uint64_t sphere_residue_count(std::int64_t p, int dim, int order, int level);

using ResidueVisitor = std::function<void(std::span<const Rational>)>;

// Visits every level-M coset representative inside p^ball_exp Z_p^N in
// lexicographic order. Every residue carries Haar weight p^(-M N).
void for_each_ball_residue(std::int64_t p, int dim, int ball_exp, int level,
                           const ResidueVisitor& visit);

// Same for the sphere of points of exact (max-norm) order `order`,
// i.e. norm p^(-order). Requires level >= order + 1.
void for_each_sphere_residue(std::int64_t p, int dim, int order, int level,
                             const ResidueVisitor& visit);

std::vector<PAdicResidue> enumerate_ball_residues(int ball_exp, int level,
                                                  const PrimeParams& params);
std::vector<PAdicResidue> enumerate_sphere_residues(int j, int level, const PrimeParams& params);

}  // namespace padicqm
