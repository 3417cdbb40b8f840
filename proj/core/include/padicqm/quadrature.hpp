#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>

#include "padicqm/cyclotomic.hpp"
#include "padicqm/padic.hpp"

namespace padicqm {

/// A complex-valued function on Q_p^N that is constant on every coset
/// a + p^level Z_p^N. When support_exp is set, the function equals
/// exterior_value outside the ball p^support_exp Z_p^N.
struct LocallyConstantFn {
  std::function<std::complex<double>(std::span<const Rational>)> eval;
  int level = 0;
  std::optional<int> support_exp;
  std::complex<double> exterior_value{0.0, 0.0};

  std::complex<double> operator()(std::span<const Rational> x) const { return eval(x); }
  std::complex<double> operator()(const Rational& x) const { return eval({&x, 1}); }
};

/// Same contract with exact cyclotomic values.
struct ExactLocallyConstantFn {
  std::function<Cyclotomic(std::span<const Rational>)> eval;
  int level = 0;
  std::optional<int> support_exp;

  Cyclotomic operator()(std::span<const Rational> x) const { return eval(x); }
  Cyclotomic operator()(const Rational& x) const { return eval({&x, 1}); }

  LocallyConstantFn as_complex() const;
};

class QuadratureBudgetError : public std::runtime_error {
 public:
  QuadratureBudgetError(std::uint64_t nodes, std::uint64_t budget);

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t nodes_;
  std::uint64_t budget_;
};

struct QuadratureOptions {
  std::uint64_t node_budget = 10'000'000;
  // Spot-check the declared constancy level before integrating. On by
  // default in debug builds.
#ifdef NDEBUG
  bool verify_constancy = false;
#else
  bool verify_constancy = true;
#endif
};

// Exact residue sums over the ball p^ball_exp Z_p^N at level
// max(f.level, ball_exp).
std::complex<double> integrate_ball(const LocallyConstantFn& f, int ball_exp,
                                    const PrimeParams& params, const QuadratureOptions& opts = {});
Cyclotomic integrate_ball(const ExactLocallyConstantFn& f, int ball_exp, const PrimeParams& params,
                          const QuadratureOptions& opts = {});

// Residue sums over the sphere of points with max-norm p^(-j) at level
// max(f.level, j + 1).
std::complex<double> integrate_sphere(const LocallyConstantFn& f, int j, const PrimeParams& params,
                                      const QuadratureOptions& opts = {});
Cyclotomic integrate_sphere(const ExactLocallyConstantFn& f, int j, const PrimeParams& params,
                            const QuadratureOptions& opts = {});

// <f, g> = integral over the ball of f * conj(g).
std::complex<double> inner_product(const LocallyConstantFn& f, const LocallyConstantFn& g,
                                   int ball_exp, const PrimeParams& params,
                                   const QuadratureOptions& opts = {});
Cyclotomic inner_product(const ExactLocallyConstantFn& f, const ExactLocallyConstantFn& g,
                         int ball_exp, const PrimeParams& params,
                         const QuadratureOptions& opts = {});

// Samples `samples` coset pairs inside p^ball_exp Z_p^N: a random level-ell
// representative and a second point of the same coset with random deeper
// digits. Returns false on the first pair whose values differ.
bool verify_constancy(const LocallyConstantFn& f, int ball_exp, const PrimeParams& params,
                      std::mt19937_64& rng, int samples = 32);

// Common building blocks.
LocallyConstantFn constant_fn(std::complex<double> value);
// Indicator of the ball p^e Z_p^N.
ExactLocallyConstantFn ball_indicator(int e, const PrimeParams& params);
// Indicator of the sphere of max-norm p^(-j).
ExactLocallyConstantFn sphere_indicator(int j, const PrimeParams& params);

}  // namespace padicqm
