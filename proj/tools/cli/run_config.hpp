#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <padicqm/ctqw.hpp>

namespace CLI {
class App;
}

namespace padicqw {

inline constexpr const char* kSchemaVersion = "padicqw/1";

enum class GraphKind { KInfinity, KR0 };
enum class OutputFormat { Csv, Json };

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::int64_t p = 3;
  double alpha = 1.0;
  double mass = 1.0;
  int r0 = 3;
  int truncation = 8;
  GraphKind graph = GraphKind::KR0;
  // Vertex names: a sphere index ("2") or "gamma". Empty means every vertex
  // of the finite graph, or sphere 0 for the infinite one.
  std::vector<std::string> sources;
  double t_start = 0.0;
  double t_end = 2.0;
  int t_steps = 50;
  OutputFormat format = OutputFormat::Csv;
  std::string out;  // empty: standard output
  std::uint64_t node_budget = 10'000'000;
  double tol = 1e-9;

  // expand
  std::optional<int> sphere;
  std::optional<int> ball;
  std::string method = "closed";

  // fg-walk
  int n_vertices = 4;
  double gamma = 1.0;

  // Throws ConfigError naming the offending field.
  void validate() const;
  padicqm::PrimeParams prime_params() const;
  padicqm::QuadratureOptions quadrature() const;
  // t_steps points from t_start to t_end inclusive.
  std::vector<double> time_grid() const;
  std::vector<padicqm::Vertex> source_vertices() const;
};

// Registers every RunConfig field as a flag on `app`.
void add_config_options(CLI::App& app, RunConfig& cfg);

std::string vertex_name(const padicqm::Vertex& v);
padicqm::Vertex parse_vertex(const std::string& text, int r0);

const char* graph_name(GraphKind g);
const char* format_name(OutputFormat f);

}  // namespace padicqw
