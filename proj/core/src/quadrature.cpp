#include "padicqm/quadrature.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace padicqm {
namespace {

// Neumaier-compensated complex accumulator; summation order is the
// residue enumeration order, so results are bitwise reproducible.
class ComplexSum {
 public:
  void add(std::complex<double> v) {
    add_part(re_, re_c_, v.real());
    add_part(im_, im_c_, v.imag());
  }
  std::complex<double> value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_part(double& sum, double& comp, double v) {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

void check_budget(std::uint64_t nodes, const QuadratureOptions& opts) {
  if (nodes > opts.node_budget) throw QuadratureBudgetError(nodes, opts.node_budget);
}

void maybe_verify(const LocallyConstantFn& f, int ball_exp, const PrimeParams& params,
                  const QuadratureOptions& opts) {
  if (!opts.verify_constancy) return;
  std::mt19937_64 rng(0x5eed0fULL + static_cast<std::uint64_t>(f.level));
  if (!verify_constancy(f, ball_exp, params, rng)) {
    throw std::logic_error("integrand is not constant at its declared level " +
                           std::to_string(f.level));
  }
}

template <typename Visit>
void visit_ball(const PrimeParams& params, int ball_exp, int level, const QuadratureOptions& opts,
                Visit&& visit) {
  check_budget(ball_residue_count(params.p(), params.dim(), ball_exp, level), opts);
  for_each_ball_residue(params.p(), params.dim(), ball_exp, level, visit);
}

template <typename Visit>
void visit_sphere(const PrimeParams& params, int j, int level, const QuadratureOptions& opts,
                  Visit&& visit) {
  check_budget(sphere_residue_count(params.p(), params.dim(), j, level), opts);
  for_each_sphere_residue(params.p(), params.dim(), j, level, visit);
}

Rational node_weight(const PrimeParams& params, int level) {
  return prime_power(params.p(), -level * params.dim());
}

}  // namespace

QuadratureBudgetError::QuadratureBudgetError(std::uint64_t nodes, std::uint64_t budget)
    : std::runtime_error("quadrature needs " + std::to_string(nodes) +
                         " nodes, exceeding the budget of " + std::to_string(budget)),
      nodes_(nodes),
      budget_(budget) {}

LocallyConstantFn ExactLocallyConstantFn::as_complex() const {
  auto exact = eval;
  return {[exact](std::span<const Rational> x) { return exact(x).to_complex(); }, level,
          support_exp};
}

std::complex<double> integrate_ball(const LocallyConstantFn& f, int ball_exp,
                                    const PrimeParams& params, const QuadratureOptions& opts) {
  const int level = std::max(f.level, ball_exp);
  maybe_verify(f, ball_exp, params, opts);
  ComplexSum sum;
  visit_ball(params, ball_exp, level, opts, [&](std::span<const Rational> x) { sum.add(f(x)); });
  return sum.value() * node_weight(params, level).to_double();
}

Cyclotomic integrate_ball(const ExactLocallyConstantFn& f, int ball_exp, const PrimeParams& params,
                          const QuadratureOptions& opts) {
  const int level = std::max(f.level, ball_exp);
  if (opts.verify_constancy) maybe_verify(f.as_complex(), ball_exp, params, opts);
  Cyclotomic sum;
  visit_ball(params, ball_exp, level, opts, [&](std::span<const Rational> x) { sum += f(x); });
  return sum * node_weight(params, level);
}

std::complex<double> integrate_sphere(const LocallyConstantFn& f, int j, const PrimeParams& params,
                                      const QuadratureOptions& opts) {
  const int level = std::max(f.level, j + 1);
  maybe_verify(f, j, params, opts);
  ComplexSum sum;
  visit_sphere(params, j, level, opts, [&](std::span<const Rational> x) { sum.add(f(x)); });
  return sum.value() * node_weight(params, level).to_double();
}

Cyclotomic integrate_sphere(const ExactLocallyConstantFn& f, int j, const PrimeParams& params,
                            const QuadratureOptions& opts) {
  const int level = std::max(f.level, j + 1);
  if (opts.verify_constancy) maybe_verify(f.as_complex(), j, params, opts);
  Cyclotomic sum;
  visit_sphere(params, j, level, opts, [&](std::span<const Rational> x) { sum += f(x); });
  return sum * node_weight(params, level);
}

std::complex<double> inner_product(const LocallyConstantFn& f, const LocallyConstantFn& g,
                                   int ball_exp, const PrimeParams& params,
                                   const QuadratureOptions& opts) {
  LocallyConstantFn product{
      [&f, &g](std::span<const Rational> x) { return f(x) * std::conj(g(x)); },
      std::max(f.level, g.level), std::nullopt, {}};
  return integrate_ball(product, ball_exp, params, opts);
}

Cyclotomic inner_product(const ExactLocallyConstantFn& f, const ExactLocallyConstantFn& g,
                         int ball_exp, const PrimeParams& params, const QuadratureOptions& opts) {
  ExactLocallyConstantFn product{
      [&f, &g](std::span<const Rational> x) { return f(x) * g(x).conj(); },
      std::max(f.level, g.level), std::nullopt};
  return integrate_ball(product, ball_exp, params, opts);
}

bool verify_constancy(const LocallyConstantFn& f, int ball_exp, const PrimeParams& params,
                      std::mt19937_64& rng, int samples) {
  const std::int64_t p = params.p();
  const int level = std::max(f.level, ball_exp);
  // Representatives: p^ball_exp * n with n < p^(level - ball_exp), capped so
  // the digits stay in range for large levels.
  const int rep_digits = std::min(level - ball_exp, 12);
  const std::int64_t rep_range = int_power(p, rep_digits);
  const std::int64_t deep_range = int_power(p, 3);
  std::uniform_int_distribution<std::int64_t> rep_dist(0, rep_range - 1);
  std::uniform_int_distribution<std::int64_t> deep_dist(1, deep_range - 1);
  const Rational outer = prime_power(p, ball_exp);
  const Rational inner = prime_power(p, level);

  Point a(static_cast<std::size_t>(params.dim()));
  Point b(static_cast<std::size_t>(params.dim()));
  for (int s = 0; s < samples; ++s) {
    for (int i = 0; i < params.dim(); ++i) {
      a[i] = outer * Rational(rep_dist(rng));
      b[i] = a[i] + inner * Rational(deep_dist(rng));
    }
    const auto fa = f(a);
    const auto fb = f(b);
    if (std::abs(fa - fb) > 1e-12 * std::max(1.0, std::abs(fa))) return false;
  }
  return true;
}

LocallyConstantFn constant_fn(std::complex<double> value) {
  return {[value](std::span<const Rational>) { return value; }, 0, 0, value};
}

ExactLocallyConstantFn ball_indicator(int e, const PrimeParams& params) {
  const std::int64_t p = params.p();
  return {[p, e](std::span<const Rational> x) {
            Order o = order_of(x, p);
            return Cyclotomic(Rational(o >= Order::finite(e) ? 1 : 0));
          },
          e, e};
}

ExactLocallyConstantFn sphere_indicator(int j, const PrimeParams& params) {
  const std::int64_t p = params.p();
  return {[p, j](std::span<const Rational> x) {
            Order o = order_of(x, p);
            return Cyclotomic(Rational(o == Order::finite(j) ? 1 : 0));
          },
          j + 1, j};
}

}  // namespace padicqm
