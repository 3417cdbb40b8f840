#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padicqm/schrodinger.hpp"

namespace padicqm {

// Graph vertices are regions of the partition: spheres S_-j and, for the
// finite graph, the residual ball Gamma = p^R0 Z_p.
using Vertex = Region;

/// Fully connected walk graph. Infinite kind: vertices S_0, S_-1, ...
/// truncated at J for reporting (the rest is an analytic tail). Finite kind:
/// vertices S_0 .. S_-(R0-1) and Gamma.
class WalkGraph {
 public:
  enum class Kind { Infinite, Finite };

  static WalkGraph infinite(int truncation);
  static WalkGraph finite(int R0);

  Kind kind() const { return kind_; }
  // J for the infinite kind, R0 for the finite kind.
  int size_param() const { return n_; }
  std::vector<Vertex> vertices() const;
  bool has_vertex(const Vertex& v) const;

 private:
  WalkGraph(Kind kind, int n) : kind_(kind), n_(n) {}
  Kind kind_;
  int n_;
};

struct TransitionColumn {
  Vertex source;
  double t = 0.0;
  std::vector<std::pair<Vertex, double>> probs;
  double tail = 0.0;  // mass on spheres beyond the truncation (infinite graph)

  double total() const;
  double at(const Vertex& target) const;
};

struct ExactTransitionColumn {
  Vertex source;
  std::vector<std::pair<Vertex, Rational>> probs;
  Rational tail{0};

  Rational total() const;
};

// Probability of finding the walker started in the normalized indicator of
// `source` inside `target` at time t (Born rule, closed form). Sources and
// targets are spheres S_-j or balls p^R Z_p with R above every source scale.
double transition_probability(const Vertex& target, const Vertex& source, double t,
                              const PrimeParams& params);
Rational transition_probability_at_zero(const Vertex& target, const Vertex& source,
                                        const PrimeParams& params);

// pi_{r,v}(t) between spheres S_-r and S_-v.
double transition_prob_spheres(int r, int v, double t, const PrimeParams& params);
Rational transition_prob_spheres_at_zero(int r, int v, const PrimeParams& params);

// Column of the infinite graph for source S_-v: r = 0..J-1 plus the closed
// form tail sum over r >= J. Requires J >= v + 2.
TransitionColumn transition_matrix_K_infinity(int v, double t, int truncation,
                                              const PrimeParams& params);
ExactTransitionColumn transition_matrix_K_infinity_at_zero(int v, int truncation,
                                                           const PrimeParams& params);

// Column of the finite graph K_R0 (R0 >= 3) for a sphere S_-r, r < R0, or Gamma.
TransitionColumn transition_probs_K_R0(const Vertex& source, double t, int R0,
                                       const PrimeParams& params);
ExactTransitionColumn transition_probs_K_R0_at_zero(const Vertex& source, int R0,
                                                    const PrimeParams& params);

// |<phi_target, exp(-iHt) phi_source>|^2 for normalized indicators, from the
// two expansions.
double overlap_prob_construction1(const Vertex& target, const Vertex& source, double t,
                                  const WalkGraph& graph, const PrimeParams& params);

// Independent check of transition_probability: expands the source indicator
// by quadrature, evolves it, and integrates |Psi|^2 over the target.
double born_oracle_probability(const Vertex& target, const Vertex& source, double t,
                               const PrimeParams& params, const QuadratureOptions& opts = {});

// Complete graph on n vertices with rate gamma: H = gamma (n I - J).
// Entry (J, I) is |<e_J| exp(-iHt) |e_I>|^2 from the two-eigenvalue form.
Eigen::MatrixXd farhi_gutmann_complete_graph(int n_vertices, double gamma, double t);
Eigen::MatrixXcd farhi_gutmann_hamiltonian(int n_vertices, double gamma);
// The same probabilities from a dense matrix exponential.
Eigen::MatrixXd farhi_gutmann_dense(int n_vertices, double gamma, double t);

}  // namespace padicqm
