#include "padicqm/padic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace padicqm {
namespace {

// Strips factors of p from v, returning how many were removed.
int strip_prime(std::int64_t& v, std::int64_t p) {
  int count = 0;
  while (v != 0 && v % p == 0) {
    v /= p;
    ++count;
  }
  return count;
}

std::int64_t mod_pos(__int128 a, std::int64_t m) {
  __int128 r = a % m;
  if (r < 0) r += m;
  return static_cast<std::int64_t>(r);
}

// Inverse of a modulo m (gcd(a, m) = 1) by the extended Euclidean algorithm.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  __int128 old_r = mod_pos(a, m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw std::domain_error("mod_inverse: not invertible");
  return mod_pos(old_s, m);
}

void check_prime_arg(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Rational prime_power(std::int64_t p, int e) { return Rational::pow(Rational(p), e); }

std::int64_t int_power(std::int64_t p, int e) {
  if (e < 0) throw std::invalid_argument("int_power: negative exponent");
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(r, p, &r)) throw std::overflow_error("int_power: overflow");
  }
  return r;
}

PrimeParams::PrimeParams(std::int64_t p, double alpha, double mass, int dim, int well_exp)
    : p_(p), alpha_(alpha), mass_(mass), dim_(dim), well_exp_(well_exp) {
  if (!is_prime(p) || p < 3) throw std::invalid_argument("p must be prime >= 3");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("alpha must be > 0");
  if (!(mass > 0.0) || !std::isfinite(mass)) throw std::invalid_argument("mass must be > 0");
  if (dim < 1) throw std::invalid_argument("dim must be >= 1");
}

PrimeParams PrimeParams::with_alpha(double alpha) const {
  return PrimeParams(p_, alpha, mass_, dim_, well_exp_);
}
PrimeParams PrimeParams::with_dim(int dim) const {
  return PrimeParams(p_, alpha_, mass_, dim, well_exp_);
}
PrimeParams PrimeParams::with_well_exp(int well_exp) const {
  return PrimeParams(p_, alpha_, mass_, dim_, well_exp);
}

void PrimeParams::require_unit_line(const char* who) const {
  if (dim_ != 1 || well_exp_ != 0) {
    throw std::invalid_argument(std::string(who) + ": requires dim = 1 and well_exp = 0");
  }
}

std::int64_t Order::value() const {
  if (infinite_) throw std::logic_error("Order::value: order of zero is infinite");
  return value_;
}

std::strong_ordering operator<=>(const Order& a, const Order& b) {
  if (a.infinite_ || b.infinite_) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    return a.infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return a.value_ <=> b.value_;
}

std::string Order::str() const { return infinite_ ? "+inf" : std::to_string(value_); }

Order order_of(const Rational& x, std::int64_t p) {
  check_prime_arg(p);
  if (x.is_zero()) return Order::infinity();
  std::int64_t n = x.num();
  std::int64_t d = x.den();
  int up = strip_prime(n, p);
  int down = strip_prime(d, p);
  return Order::finite(up - down);
}

Rational norm_of(const Rational& x, std::int64_t p) {
  Order o = order_of(x, p);
  if (o.is_infinite()) return Rational(0);
  return prime_power(p, -static_cast<int>(o.value()));
}

OrderNorm order_and_norm(const Rational& x, std::int64_t p) {
  Order o = order_of(x, p);
  return {o, o.is_infinite() ? Rational(0) : prime_power(p, -static_cast<int>(o.value()))};
}

Order order_of(std::span<const Rational> x, std::int64_t p) {
  Order best = Order::infinity();
  for (const auto& c : x) best = std::min(best, order_of(c, p));
  return best;
}

Rational norm_of(std::span<const Rational> x, std::int64_t p) {
  Order o = order_of(x, p);
  if (o.is_infinite()) return Rational(0);
  return prime_power(p, -static_cast<int>(o.value()));
}

std::complex<double> UnitTurn::value() const { return unit_root(turn); }

UnitTurn fractional_part(const Rational& x, std::int64_t p) {
  check_prime_arg(p);
  if (x.is_zero()) return {Rational(0)};
  std::int64_t den = x.den();
  int k = strip_prime(den, p);
  if (k == 0) return {Rational(0)};
  // x = a / (den * p^k) with p not dividing den; {x}_p = c / p^k where
  // c = a * den^{-1} mod p^k.
  std::int64_t pk = int_power(p, k);
  std::int64_t inv = mod_inverse(mod_pos(den, pk), pk);
  std::int64_t c = mod_pos(static_cast<__int128>(mod_pos(x.num(), pk)) * inv, pk);
  return {Rational(c, pk)};
}

std::complex<double> unit_root(const Rational& turn) {
  Rational t = turn.frac();
  if (t.is_zero()) return {1.0, 0.0};
  if (t == Rational(1, 2)) return {-1.0, 0.0};
  if (t == Rational(1, 4)) return {0.0, 1.0};
  if (t == Rational(3, 4)) return {0.0, -1.0};
  // Symmetric reduction to (-1/2, 1/2] keeps the argument small.
  if (t > Rational(1, 2)) t -= Rational(1);
  const long double angle = 2.0L * std::numbers::pi_v<long double> * t.to_long_double();
  return {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))};
}

std::complex<double> character(const Rational& x, std::int64_t p) {
  return fractional_part(x, p).value();
}

PAdicScalar::PAdicScalar(const Rational& value, std::int64_t p)
    : value_(value), p_(p), order_(order_of(value, p)) {}

Rational PAdicScalar::norm() const {
  if (order_.is_infinite()) return Rational(0);
  return prime_power(p_, -static_cast<int>(order_.value()));
}

Rational PAdicScalar::unit() const {
  if (order_.is_infinite()) return Rational(0);
  return value_ * prime_power(p_, -static_cast<int>(order_.value()));
}

UnitTurn PAdicScalar::fractional_part() const { return padicqm::fractional_part(value_, p_); }

void PAdicScalar::check_same_prime(const PAdicScalar& o) const {
  if (o.p_ != p_) throw std::invalid_argument("PAdicScalar: mixed primes");
}

PAdicScalar PAdicScalar::operator+(const PAdicScalar& o) const {
  check_same_prime(o);
  return PAdicScalar(value_ + o.value_, p_);
}
PAdicScalar PAdicScalar::operator-(const PAdicScalar& o) const {
  check_same_prime(o);
  return PAdicScalar(value_ - o.value_, p_);
}
PAdicScalar PAdicScalar::operator*(const PAdicScalar& o) const {
  check_same_prime(o);
  return PAdicScalar(value_ * o.value_, p_);
}
PAdicScalar PAdicScalar::operator-() const { return PAdicScalar(-value_, p_); }

std::uint64_t ball_residue_count(std::int64_t p, int dim, int ball_exp, int level) {
  if (level < ball_exp) throw std::invalid_argument("residue level below ball exponent");
  std::uint64_t per_axis = static_cast<std::uint64_t>(int_power(p, level - ball_exp));
  std::uint64_t total = 1;
  for (int i = 0; i < dim; ++i) {
    if (__builtin_mul_overflow(total, per_axis, &total)) {
      throw std::overflow_error("residue count overflow");
    }
  }
  return total;
}

std::uint64_t sphere_residue_count(std::int64_t p, int dim, int order, int level) {
  if (level <= order) throw std::invalid_argument("sphere residues need level >= order + 1");
  return ball_residue_count(p, dim, order, level) - ball_residue_count(p, dim, order + 1, level);
}

namespace {

// Iterates integer digit vectors n in [0, count)^dim and calls visit with
// the point scale * n.
void for_each_scaled_grid(std::int64_t count, int dim, const Rational& scale,
                          const std::function<bool(std::span<const std::int64_t>)>& keep,
                          const ResidueVisitor& visit) {
  std::vector<std::int64_t> n(static_cast<std::size_t>(dim), 0);
  Point x(static_cast<std::size_t>(dim), Rational(0));
  while (true) {
    if (keep(n)) {
      for (int i = 0; i < dim; ++i) x[i] = scale * Rational(n[i]);
      visit(x);
    }
    int axis = dim - 1;
    while (axis >= 0) {
      if (++n[axis] < count) break;
      n[axis] = 0;
      --axis;
    }
    if (axis < 0) return;
  }
}

}  // namespace

void for_each_ball_residue(std::int64_t p, int dim, int ball_exp, int level,
                           const ResidueVisitor& visit) {
  ball_residue_count(p, dim, ball_exp, level);
  std::int64_t count = int_power(p, level - ball_exp);
  for_each_scaled_grid(count, dim, prime_power(p, ball_exp),
                       [](std::span<const std::int64_t>) { return true; }, visit);
}

void for_each_sphere_residue(std::int64_t p, int dim, int order, int level,
                             const ResidueVisitor& visit) {
  sphere_residue_count(p, dim, order, level);
  std::int64_t count = int_power(p, level - order);
  // Exact order means at least one digit vector component is a p-adic unit.
  auto unit_somewhere = [p](std::span<const std::int64_t> n) {
    for (auto v : n) {
      if (v % p != 0) return true;
    }
    return false;
  };
  for_each_scaled_grid(count, dim, prime_power(p, order), unit_somewhere, visit);
}

std::vector<PAdicResidue> enumerate_ball_residues(int ball_exp, int level,
                                                  const PrimeParams& params) {
  std::vector<PAdicResidue> out;
  out.reserve(ball_residue_count(params.p(), params.dim(), ball_exp, level));
  const Rational weight = prime_power(params.p(), -level * params.dim());
  for_each_ball_residue(params.p(), params.dim(), ball_exp, level,
                        [&](std::span<const Rational> x) {
                          out.push_back({level, Point(x.begin(), x.end()), weight});
                        });
  return out;
}

std::vector<PAdicResidue> enumerate_sphere_residues(int j, int level, const PrimeParams& params) {
  std::vector<PAdicResidue> out;
  out.reserve(sphere_residue_count(params.p(), params.dim(), j, level));
  const Rational weight = prime_power(params.p(), -level * params.dim());
  for_each_sphere_residue(params.p(), params.dim(), j, level, [&](std::span<const Rational> x) {
    out.push_back({level, Point(x.begin(), x.end()), weight});
  });
  return out;
}

}  // namespace padicqm
