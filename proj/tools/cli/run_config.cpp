#include "run_config.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

namespace padicqw {

void add_config_options(CLI::App& app, RunConfig& cfg) {
  app.add_option("--p", cfg.p, "Prime p >= 3");
  app.add_option("--alpha", cfg.alpha, "Operator exponent alpha > 0");
  app.add_option("--mass", cfg.mass, "Mass constant m_alpha > 0");
  app.add_option("--r0", cfg.r0, "Radius exponent R0 of the residual ball (finite graph)");
  app.add_option("--truncation", cfg.truncation, "Truncation J of the infinite graph");
  app.add_option("--graph", cfg.graph, "Walk graph")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, GraphKind>{{"kinf", GraphKind::KInfinity}, {"kr0", GraphKind::KR0}},
          CLI::ignore_case));
  app.add_option("--source", cfg.sources, "Source vertices: sphere index or 'gamma'")
      ->delimiter(',');
  app.add_option("--t-start", cfg.t_start, "First time point");
  app.add_option("--t-end", cfg.t_end, "Last time point");
  app.add_option("--t-steps", cfg.t_steps, "Number of time points, both ends included");
  app.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"csv", OutputFormat::Csv},
                                              {"json", OutputFormat::Json}},
          CLI::ignore_case));
  app.add_option("--out", cfg.out, "Output path (default: standard output)");
  app.add_option("--node-budget", cfg.node_budget, "Quadrature node budget");
  app.add_option("--tol", cfg.tol, "Tolerance for sums and oracle checks");
  app.add_option("--sphere", cfg.sphere, "expand: sphere index j");
  app.add_option("--ball", cfg.ball, "expand: ball exponent R0");
  app.add_option("--method", cfg.method, "expand: closed or quadrature")
      ->check(CLI::IsMember({"closed", "quadrature"}));
  app.add_option("--n-vertices", cfg.n_vertices, "fg-walk: number of vertices");
  app.add_option("--gamma", cfg.gamma, "fg-walk: jumping rate");
}

void RunConfig::validate() const {
  try {
    (void)prime_params();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid parameters: ") + e.what());
  }
  if (r0 < 3) throw ConfigError("--r0 must be >= 3");
  if (truncation < 2) throw ConfigError("--truncation must be >= 2");
  if (!(t_start >= 0.0) || !std::isfinite(t_start)) throw ConfigError("--t-start must be >= 0");
  if (!(t_end >= t_start) || !std::isfinite(t_end)) throw ConfigError("--t-end must be >= --t-start");
  if (t_steps < 1) throw ConfigError("--t-steps must be >= 1");
  if (node_budget < 1) throw ConfigError("--node-budget must be >= 1");
  if (!(tol > 0.0)) throw ConfigError("--tol must be > 0");
  if (sphere && *sphere < 0) throw ConfigError("--sphere must be >= 0");
  if (ball && *ball < 1) throw ConfigError("--ball must be >= 1");
  if (n_vertices < 2) throw ConfigError("--n-vertices must be >= 2");
  if (!(gamma > 0.0)) throw ConfigError("--gamma must be > 0");
}

padicqm::PrimeParams RunConfig::prime_params() const { return padicqm::PrimeParams(p, alpha, mass); }

padicqm::QuadratureOptions RunConfig::quadrature() const {
  padicqm::QuadratureOptions opts;
  opts.node_budget = node_budget;
  return opts;
}

std::vector<double> RunConfig::time_grid() const {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(t_steps));
  if (t_steps == 1) {
    grid.push_back(t_start);
    return grid;
  }
  const double step = (t_end - t_start) / (t_steps - 1);
  for (int i = 0; i < t_steps; ++i) grid.push_back(i + 1 == t_steps ? t_end : t_start + i * step);
  return grid;
}

std::vector<padicqm::Vertex> RunConfig::source_vertices() const {
  std::vector<padicqm::Vertex> out;
  if (sources.empty()) {
    if (graph == GraphKind::KR0) return padicqm::WalkGraph::finite(r0).vertices();
    out.push_back(padicqm::Region::sphere(0));
    return out;
  }
  for (const auto& s : sources) {
    const auto v = parse_vertex(s, r0);
    if (graph == GraphKind::KR0 && !padicqm::WalkGraph::finite(r0).has_vertex(v)) {
      throw ConfigError("--source " + s + " is not a vertex of K_R0 with R0 = " +
                        std::to_string(r0));
    }
    if (graph == GraphKind::KInfinity) {
      if (v.kind != padicqm::Region::Kind::Sphere) {
        throw ConfigError("--source gamma needs --graph kr0");
      }
      if (truncation < v.index + 2) {
        throw ConfigError("--truncation must be at least source + 2 for source " + s);
      }
    }
    out.push_back(v);
  }
  return out;
}

std::string vertex_name(const padicqm::Vertex& v) {
  if (v.kind == padicqm::Region::Kind::Ball) return "gamma";
  return "S" + std::to_string(v.index);
}

padicqm::Vertex parse_vertex(const std::string& text, int r0) {
  std::string s = text;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "gamma" || s == "g") return padicqm::Region::ball(r0);
  if (!s.empty() && s[0] == 's') s.erase(0, 1);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ConfigError("--source: cannot parse vertex '" + text + "'");
  }
  return padicqm::Region::sphere(std::stoi(s));
}

const char* graph_name(GraphKind g) { return g == GraphKind::KR0 ? "kr0" : "kinf"; }

const char* format_name(OutputFormat f) { return f == OutputFormat::Csv ? "csv" : "json"; }

}  // namespace padicqw
