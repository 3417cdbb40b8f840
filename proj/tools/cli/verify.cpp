#include <algorithm>
#include <cmath>

#include "commands.hpp"

namespace padicqw {
namespace {

using namespace padicqm;

class Suite {
 public:
  void record(std::string name, double tolerance, double observed) {
    results_.push_back({std::move(name), tolerance, observed, observed <= tolerance});
  }
  // Exact checks: observed is the number of mismatches.
  void record_exact(std::string name, int mismatches) {
    results_.push_back({std::move(name), 0.0, static_cast<double>(mismatches), mismatches == 0});
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

// A few evenly spaced points of the configured grid, ends included.
std::vector<double> sample_times(const RunConfig& cfg, std::size_t count) {
  const auto grid = cfg.time_grid();
  if (grid.size() <= count) return grid;
  std::vector<double> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(grid[i * (grid.size() - 1) / (count - 1)]);
  return out;
}

void ball_indicator_checks(Suite& suite, const PrimeParams& params, const QuadratureOptions& opts) {
  const auto well = ball_indicator(0, params).as_complex();
  const double inside = std::abs(tv_apply_integral(well, Rational(0), params, 0, opts) -
                                 tv_ball_indicator_closed_form(Rational(0), 0, params));
  suite.record("tv_ball_indicator_interior", 1e-10, inside);
  double outside = 0.0;
  for (int s = 1; s <= 3; ++s) {
    const Rational x = prime_power(params.p(), -s);
    outside = std::max(outside, std::abs(tv_apply_integral(well, x, params, s, opts) -
                                         tv_ball_indicator_closed_form(norm_of(x, params.p()), 0,
                                                                       params)));
  }
  suite.record("tv_ball_indicator_exterior", 1e-10, outside);
  const auto one = constant_fn({1.0, 0.0});
  suite.record("tv_constant_is_zero", 1e-12,
               std::abs(tv_apply_integral(one, Rational(1, params.p()), params, 1, opts)));
}

void eigen_checks(Suite& suite, const PrimeParams& params, const QuadratureOptions& opts) {
  double worst = 0.0;
  for (int r : {0, -1, -2}) {
    for (int k = 1; k < params.p(); ++k) {
      const auto idx = WaveletIndex::centered(r, {k});
      const auto f = wavelet_fn(idx, params);
      const long double eigen = tv_eigenvalue(r, params);
      for_each_ball_residue(params.p(), 1, -r, wavelet_level(idx) + 1,
                            [&](std::span<const Rational> x) {
                              const auto lhs = tv_apply_integral(f, x, params, -r, opts);
                              const auto rhs = static_cast<double>(eigen) * f(x);
                              worst = std::max(worst, std::abs(lhs - rhs));
                            });
    }
  }
  suite.record("tv_eigen_relation", 1e-9, worst);
}

void lemma5_checks(Suite& suite, const PrimeParams& params, const QuadratureOptions&) {
  int mismatches = 0;
  for (int r : {0, -1}) {
    for (int k = 1; k < params.p(); ++k) {
      if (!(lemma5_I({k}, r, params) == lemma5_I_quadrature({k}, r, params))) ++mismatches;
      for (int j = 1; j < params.p(); ++j) {
        if (!(lemma5_J({k}, {j}, r, params) == lemma5_J_quadrature({k}, {j}, r, params))) {
          ++mismatches;
        }
      }
    }
  }
  suite.record_exact("cosine_integrals_exact", mismatches);
}

void expansion_checks(Suite& suite, const RunConfig& cfg, const PrimeParams& params,
                      const QuadratureOptions& opts) {
  int oracle = 0;
  int parseval = 0;
  for (int j = 0; j <= cfg.r0; ++j) {
    const auto closed = expand_sphere_indicator(j, params);
    if (!same_coefficients(closed, expand_radial(sphere_indicator(j, params), j + 1, params, opts))) {
      ++oracle;
    }
    if (!(parseval_norm_sq(closed) == Region::sphere(j).volume(params.p()))) ++parseval;
  }
  for (int R0 = 1; R0 <= cfg.r0; ++R0) {
    const auto closed = expand_small_ball_indicator(R0, params);
    if (!same_coefficients(closed, expand_radial(ball_indicator(R0, params), R0, params, opts))) {
      ++oracle;
    }
    if (!(parseval_norm_sq(closed) == Region::ball(R0).volume(params.p()))) ++parseval;
  }
  suite.record_exact("radial_expansion_oracle_exact", oracle);
  suite.record_exact("parseval_exact", parseval);
}

void walk_checks(Suite& suite, const RunConfig& cfg, const PrimeParams& params,
                 const QuadratureOptions& opts) {
  // t = 0: delta columns as exact rationals.
  int delta = 0;
  for (int v = 0; v <= 4; ++v) {
    const auto col = transition_matrix_K_infinity_at_zero(v, v + 6, params);
    for (const auto& [target, prob] : col.probs) {
      if (!(prob == Rational(target.index == v ? 1 : 0))) ++delta;
    }
    if (!col.tail.is_zero()) ++delta;
  }
  for (const auto& source : WalkGraph::finite(cfg.r0).vertices()) {
    const auto col = transition_probs_K_R0_at_zero(source, cfg.r0, params);
    for (const auto& [target, prob] : col.probs) {
      if (!(prob == Rational(target == source ? 1 : 0))) ++delta;
    }
  }
  suite.record_exact("t0_delta_columns_exact", delta);

  const auto grid = cfg.time_grid();
  double kr0 = 0.0;
  double kinf = 0.0;
  double range = 0.0;
  for (double t : grid) {
    for (const auto& source : WalkGraph::finite(cfg.r0).vertices()) {
      const auto col = transition_probs_K_R0(source, t, cfg.r0, params);
      kr0 = std::max(kr0, std::abs(col.total() - 1.0));
      for (const auto& [target, prob] : col.probs) {
        range = std::max({range, -prob, prob - 1.0});
      }
    }
    for (int v = 0; v <= 3; ++v) {
      const auto col = transition_matrix_K_infinity(v, t, v + 6, params);
      kinf = std::max(kinf, std::abs(col.total() - 1.0));
    }
  }
  suite.record("stochastic_columns_finite_graph", cfg.tol, kr0);
  suite.record("stochastic_columns_infinite_graph", cfg.tol, kinf);
  suite.record("probabilities_in_unit_interval", 1e-12, std::max(range, 0.0));

  double tail_law = 0.0;
  for (double t : sample_times(cfg, 5)) {
    for (int v = 0; v <= 2; ++v) {
      for (int r = v + 1; r <= v + 4; ++r) {
        const double a = transition_prob_spheres(r, v, t, params);
        const double b = transition_prob_spheres(r + 1, v, t, params);
        if (b > 1e-15) {
          tail_law = std::max(tail_law, std::abs(a / b - static_cast<double>(params.p())) /
                                            static_cast<double>(params.p()));
        }
      }
    }
  }
  suite.record("geometric_tail_ratio", 1e-9, tail_law);

  double oracle = 0.0;
  double unitarity = 0.0;
  const auto vertices = WalkGraph::finite(cfg.r0).vertices();
  for (double t : sample_times(cfg, 5)) {
    for (const auto& source : vertices) {
      for (const auto& target : vertices) {
        oracle = std::max(oracle, std::abs(transition_probability(target, source, t, params) -
                                           born_oracle_probability(target, source, t, params, opts)));
      }
      const auto state = normalized_indicator_state(source, params).at_time(t);
      unitarity = std::max(unitarity, std::abs(born_probability(state, Region::ball(0), opts) - 1.0));
    }
  }
  suite.record("born_rule_oracle", 1e-10, oracle);
  suite.record("unitarity", 1e-12, unitarity);
}

void farhi_gutmann_checks(Suite& suite, const RunConfig& cfg) {
  double dense = 0.0;
  double off = 0.0;
  for (int n = 2; n <= 8; ++n) {
    for (double t : sample_times(cfg, 5)) {
      const auto closed = farhi_gutmann_complete_graph(n, cfg.gamma, t);
      dense = std::max(dense, (closed - farhi_gutmann_dense(n, cfg.gamma, t)).cwiseAbs().maxCoeff());
      const double expected = 2.0 / (n * n) * (1.0 - std::cos(n * cfg.gamma * t));
      off = std::max(off, std::abs(closed(1, 0) - expected));
    }
  }
  suite.record("farhi_gutmann_dense_expm", 1e-10, dense);
  suite.record("farhi_gutmann_off_diagonal", 1e-10, off);
}

}  // namespace

std::vector<CheckResult> run_verification(const RunConfig& cfg) {
  const auto params = cfg.prime_params();
  const auto opts = cfg.quadrature();
  Suite suite;
  ball_indicator_checks(suite, params, opts);
  eigen_checks(suite, params, opts);
  lemma5_checks(suite, params, opts);
  expansion_checks(suite, cfg, params, opts);
  walk_checks(suite, cfg, params, opts);
  farhi_gutmann_checks(suite, cfg);
  return suite.take();
}

}  // namespace padicqw
