#include "padicqm/cyclotomic.hpp"

#include <stdexcept>
#include <vector>

#include "padicqm/padic.hpp"

namespace padicqm {

Cyclotomic::Cyclotomic(const Rational& constant) { add_term(Rational(0), constant); }

Cyclotomic Cyclotomic::root(const Rational& turn) {
  Cyclotomic c;
  c.add_term(turn, Rational(1));
  return c;
}

Cyclotomic Cyclotomic::cos_turn(const Rational& turn) {
  Cyclotomic c;
  c.add_term(turn, Rational(1, 2));
  c.add_term(-turn, Rational(1, 2));
  return c;
}

void Cyclotomic::add_term(const Rational& turn, const Rational& coeff) {
  if (coeff.is_zero()) return;
  Rational t = turn.frac();
  auto [it, inserted] = terms_.try_emplace(t, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  Cyclotomic out;
  for (const auto& [t1, c1] : terms_) {
    for (const auto& [t2, c2] : o.terms_) out.add_term(t1 + t2, c1 * c2);
  }
  *this = std::move(out);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) c *= s;
  return *this;
}

Cyclotomic Cyclotomic::conj() const {
  Cyclotomic out;
  for (const auto& [t, c] : terms_) out.add_term(-t, c);
  return out;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [t, c] : terms_) sum += c.to_double() * unit_root(t);
  return sum;
}

std::optional<Rational> Cyclotomic::as_rational(std::int64_t p) const {
  if (terms_.empty()) return Rational(0);

  // Common denominator p^D over all turns.
  int depth = 0;
  for (const auto& [t, c] : terms_) {
    std::int64_t d = t.den();
    int e = 0;
    while (d % p == 0) {
      d /= p;
      ++e;
    }
    if (d != 1) throw std::invalid_argument("Cyclotomic: turn denominator is not a power of p");
    depth = std::max(depth, e);
  }
  if (depth == 0) return terms_.begin()->second;

  // Exponent n = turn * p^D splits as n = c + i p^{D-1}, c < p^{D-1}, i < p.
  // With omega^{p-1} = -(1 + ... + omega^{p-2}) the coordinate of
  // zeta^c omega^i (i <= p-2) is h[c][i] - h[c][p-1].
  const std::int64_t modulus = int_power(p, depth);
  const std::int64_t block = modulus / p;
  std::map<std::int64_t, std::vector<Rational>> classes;
  for (const auto& [t, coeff] : terms_) {
    std::int64_t n = (t * Rational(modulus)).num();
    auto& h = classes.try_emplace(n % block, std::vector<Rational>(p, Rational(0))).first->second;
    h[n / block] += coeff;
  }

  Rational value(0);
  for (const auto& [cls, h] : classes) {
    for (std::int64_t i = 0; i + 1 < p; ++i) {
      Rational coord = h[i] - h[p - 1];
      if (cls == 0 && i == 0) {
        value = coord;
      } else if (!coord.is_zero()) {
        return std::nullopt;
      }
    }
  }
  return value;
}

bool Cyclotomic::is_zero(std::int64_t p) const {
  auto q = as_rational(p);
  return q.has_value() && q->is_zero();
}

}  // namespace padicqm
