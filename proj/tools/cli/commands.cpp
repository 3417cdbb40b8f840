#include "commands.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "table.hpp"

namespace padicqw {
namespace {

using namespace padicqm;

// Writes to --out when given, otherwise to `out`.
int emit(const RunConfig& cfg, const std::string& command, const Table& table, std::ostream& out,
         std::ostream& err) {
  if (cfg.out.empty()) {
    write_table(out, cfg.format, command, cfg, table);
    return kExitOk;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open output file " << cfg.out << '\n';
    return kExitIo;
  }
  write_table(file, cfg.format, command, cfg, table);
  file.flush();
  if (!file) {
    err << "error: failed writing output file " << cfg.out << '\n';
    return kExitIo;
  }
  return kExitOk;
}

Table walk_table(const RunConfig& cfg, int& flagged, double& worst) {
  const auto params = cfg.prime_params();
  Table table;
  table.columns = {"t", "source", "target", "probability", "tail"};
  flagged = 0;
  worst = 0.0;
  for (const auto& source : cfg.source_vertices()) {
    for (double t : cfg.time_grid()) {
      const TransitionColumn col = cfg.graph == GraphKind::KR0
                                       ? transition_probs_K_R0(source, t, cfg.r0, params)
                                       : transition_matrix_K_infinity(source.index, t,
                                                                      cfg.truncation, params);
      const double error = std::abs(col.total() - 1.0);
      bool bad = error > cfg.tol;
      for (const auto& [target, prob] : col.probs) {
        bad = bad || prob < -cfg.tol || prob > 1.0 + cfg.tol;
        table.add({t, vertex_name(source), vertex_name(target), prob, col.tail});
      }
      worst = std::max(worst, error);
      if (bad) ++flagged;
    }
  }
  table.extra["max_column_sum_error"] = worst;
  table.extra["flagged_columns"] = flagged;
  return table;
}

}  // namespace

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto results = run_verification(cfg);
  Table table;
  table.columns = {"check", "tolerance", "observed_error", "passed"};
  int failed = 0;
  for (const auto& r : results) {
    table.add({r.name, r.tolerance, r.observed_error, r.passed});
    if (!r.passed) ++failed;
  }
  table.extra["checks"] = static_cast<long long>(results.size());
  table.extra["failed"] = failed;
  const int io = emit(cfg, "verify", table, out, err);
  if (io != kExitOk) return io;
  if (failed > 0) {
    err << "verify: " << failed << " of " << results.size() << " checks failed\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_walk(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  int flagged = 0;
  double worst = 0.0;
  const Table table = walk_table(cfg, flagged, worst);
  const int io = emit(cfg, "walk", table, out, err);
  if (io != kExitOk) return io;
  if (flagged > 0) {
    err << "walk: " << flagged << " columns fail the stochasticity check (max |sum - 1| = "
        << format_double(worst) << ", tol = " << format_double(cfg.tol) << ")\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_expand(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.sphere.has_value() == cfg.ball.has_value()) {
    throw ConfigError("expand needs exactly one of --sphere or --ball");
  }
  const auto params = cfg.prime_params();
  const Region region = cfg.sphere ? Region::sphere(*cfg.sphere) : Region::ball(*cfg.ball);
  RadialCoefficients coeffs;
  if (cfg.method == "quadrature") {
    const auto indicator = cfg.sphere ? sphere_indicator(*cfg.sphere, params)
                                      : ball_indicator(*cfg.ball, params);
    const int cutoff = cfg.sphere ? *cfg.sphere : *cfg.ball - 1;
    coeffs = expand_radial(indicator, cutoff, params, cfg.quadrature());
  } else {
    coeffs = cfg.sphere ? expand_sphere_indicator(*cfg.sphere, params)
                        : expand_small_ball_indicator(*cfg.ball, params);
  }

  Table table;
  table.columns = {"coefficient", "scale", "mantissa", "half_exp", "value"};
  table.add({std::string("c0"), nullptr, coeffs.c0.mantissa().str(),
             static_cast<long long>(coeffs.c0.half_exp()), coeffs.c0.to_double()});
  for (int m = 0; m <= coeffs.max_scale; ++m) {
    const auto c = coeffs.at(m);
    table.add({std::string("C"), static_cast<long long>(m), c.mantissa().str(),
               static_cast<long long>(c.half_exp()), c.to_double()});
  }
  const Rational parseval = parseval_norm_sq(coeffs);
  const Rational volume = region.volume(params.p());
  table.extra["region"] = region.label();
  table.extra["parseval"] = parseval.str();
  table.extra["region_volume"] = volume.str();
  table.extra["parseval_matches_volume"] = parseval == volume;

  const int io = emit(cfg, "expand", table, out, err);
  if (io != kExitOk) return io;
  if (!(parseval == volume)) {
    err << "expand: Parseval sum " << parseval << " differs from the region volume " << volume
        << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_fg_walk(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<int> sources;
  for (const auto& s : cfg.sources) {
    int v = -1;
    try {
      std::size_t used = 0;
      v = std::stoi(s, &used);
      if (used != s.size()) v = -1;
    } catch (const std::exception&) {
    }
    if (v < 0 || v >= cfg.n_vertices) {
      throw ConfigError("--source " + s + " is not a vertex index below --n-vertices");
    }
    sources.push_back(v);
  }
  if (sources.empty()) sources.push_back(0);

  Table table;
  table.columns = {"t", "source", "target", "probability", "expm_probability"};
  double worst_dense = 0.0;
  double worst_sum = 0.0;
  for (int source : sources) {
    for (double t : cfg.time_grid()) {
      const auto closed = farhi_gutmann_complete_graph(cfg.n_vertices, cfg.gamma, t);
      const auto dense = farhi_gutmann_dense(cfg.n_vertices, cfg.gamma, t);
      worst_sum = std::max(worst_sum, std::abs(closed.col(source).sum() - 1.0));
      for (int target = 0; target < cfg.n_vertices; ++target) {
        worst_dense = std::max(worst_dense, std::abs(closed(target, source) - dense(target, source)));
        table.add({t, static_cast<long long>(source), static_cast<long long>(target),
                   closed(target, source), dense(target, source)});
      }
    }
  }
  table.extra["max_expm_difference"] = worst_dense;
  table.extra["max_column_sum_error"] = worst_sum;
  const int io = emit(cfg, "fg-walk", table, out, err);
  if (io != kExitOk) return io;
  if (worst_dense > cfg.tol || worst_sum > cfg.tol) {
    err << "fg-walk: closed form and matrix exponential disagree by " << format_double(worst_dense)
        << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"p-adic infinite-well quantum walks"};
  app.name("padicqw");
  app.set_config("--config", "", "Flat key = value configuration file");
  add_config_options(app, cfg);
  app.require_subcommand(1);
  app.fallthrough();

  std::function<int()> action;
  auto add_verb = [&](const char* name, const char* help,
                      int (*fn)(const RunConfig&, std::ostream&, std::ostream&)) {
    app.add_subcommand(name, help)->callback([&, fn] {
      action = [&, fn] { return fn(cfg, out, err); };
    });
  };
  add_verb("verify", "Run the invariant suite", cmd_verify);
  add_verb("walk", "Transition probabilities over a time grid", cmd_walk);
  add_verb("expand", "Wavelet coefficients of a sphere or ball indicator", cmd_expand);
  add_verb("fg-walk", "Complete-graph reference walk", cmd_fg_walk);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    cfg.validate();
    return action();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const QuadratureBudgetError& e) {
    err << "error: " << e.what() << " (raise --node-budget)\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace padicqw
