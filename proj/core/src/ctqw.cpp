#include "padicqm/ctqw.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <unsupported/Eigen/MatrixFunctions>

namespace padicqm {
namespace {

// A constant value of the evolved wavefunction on a target region, up to the
// overall sqrt(scale): sum_n weight_n exp(-i E_n t).
struct PhaseSum {
  std::vector<Rational> weights;
  std::vector<long double> energies;

  void add(const Rational& w, long double e) {
    if (w.is_zero()) return;
    weights.push_back(w);
    energies.push_back(e);
  }

  Rational at_zero_sq() const {
    Rational s(0);
    for (const auto& w : weights) s += w;
    return s * s;
  }

  long double modulus_sq(double t) const {
    std::complex<long double> s{0.0L, 0.0L};
    for (std::size_t i = 0; i < weights.size(); ++i) {
      const std::complex<double> phase = energy_phase(energies[i], t);
      s += weights[i].to_long_double() *
           std::complex<long double>(phase.real(), phase.imag());
    }
    return std::norm(s);
  }
};

RadialCoefficients closed_form_expansion(const Vertex& v, const PrimeParams& params) {
  if (v.index < 0) throw std::invalid_argument("vertex index must be >= 0");
  if (v.kind == Region::Kind::Sphere) return expand_sphere_indicator(v.index, params);
  return expand_small_ball_indicator(v.index, params);
}

// p^(m/2) C_m as an exact rational.
Rational dilated(const RadialCoefficients& c, int m) {
  return (c.at(m) * HalfPowerAmplitude(c.p, Rational(1), m)).to_rational();
}

// Value of the evolved source state on the sphere S_-r. For m < r the
// characters chi(p^(r-m-1) k u) are trivial (k-sum p-1); for m = r the
// k-sum over units is -1; scales m > r vanish there.
PhaseSum sphere_value(const RadialCoefficients& c, int r, const PrimeParams& params) {
  const std::int64_t p = params.p();
  PhaseSum sum;
  sum.add(c.c0.to_rational(), ground_level(params));
  for (int m = 0; m <= c.max_scale && m <= r; ++m) {
    const Rational k_sum = m < r ? Rational(p - 1) : Rational(-1);
    sum.add(k_sum * dilated(c, m), scale_level(m, params));
  }
  return sum;
}

struct RegionPiece {
  Rational volume;
  PhaseSum value;
};

// The target split into pieces on which the evolved state is constant.
std::vector<RegionPiece> constant_pieces(const Vertex& target, const RadialCoefficients& c,
                                         const PrimeParams& params) {
  const std::int64_t p = params.p();
  if (target.index < 0) throw std::invalid_argument("target outside the well");
  std::vector<RegionPiece> pieces;
  if (target.kind == Region::Kind::Sphere) {
    pieces.push_back({target.volume(p), sphere_value(c, target.index, params)});
    return pieces;
  }
  // Ball p^R Z_p: spheres R..max_scale, then a ball where every scale is trivial.
  const int inner = std::max(target.index, c.max_scale + 1);
  for (int r = target.index; r < inner; ++r) {
    pieces.push_back({Region::sphere(r).volume(p), sphere_value(c, r, params)});
  }
  pieces.push_back({Region::ball(inner).volume(p), sphere_value(c, inner, params)});
  return pieces;
}

}  // namespace

WalkGraph WalkGraph::infinite(int truncation) {
  if (truncation < 1) throw std::invalid_argument("WalkGraph: truncation must be >= 1");
  return {Kind::Infinite, truncation};
}

WalkGraph WalkGraph::finite(int R0) {
  if (R0 < 3) throw std::invalid_argument("WalkGraph: R0 must be >= 3");
  return {Kind::Finite, R0};
}

std::vector<Vertex> WalkGraph::vertices() const {
  std::vector<Vertex> out;
  for (int j = 0; j < n_; ++j) out.push_back(Region::sphere(j));
  if (kind_ == Kind::Finite) out.push_back(Region::ball(n_));
  return out;
}

bool WalkGraph::has_vertex(const Vertex& v) const {
  if (v.kind == Region::Kind::Sphere) return v.index >= 0 && v.index < n_;
  return kind_ == Kind::Finite && v.index == n_;
}

double TransitionColumn::total() const {
  double s = tail;
  for (const auto& [v, prob] : probs) s += prob;
  return s;
}

double TransitionColumn::at(const Vertex& target) const {
  for (const auto& [v, prob] : probs) {
    if (v == target) return prob;
  }
  throw std::out_of_range("TransitionColumn: no entry for " + target.label());
}

Rational ExactTransitionColumn::total() const {
  Rational s = tail;
  for (const auto& [v, prob] : probs) s += prob;
  return s;
}

double transition_probability(const Vertex& target, const Vertex& source, double t,
                              const PrimeParams& params) {
  params.require_unit_line("transition_probability");
  if (t == 0.0) return transition_probability_at_zero(target, source, params).to_double();
  const auto c = closed_form_expansion(source, params);
  const Rational scale = Rational(1) / source.volume(params.p());
  long double total = 0.0L;
  for (const auto& piece : constant_pieces(target, c, params)) {
    total += piece.volume.to_long_double() * piece.value.modulus_sq(t);
  }
  return static_cast<double>(scale.to_long_double() * total);
}

Rational transition_probability_at_zero(const Vertex& target, const Vertex& source,
                                        const PrimeParams& params) {
  params.require_unit_line("transition_probability_at_zero");
  const auto c = closed_form_expansion(source, params);
  Rational total(0);
  for (const auto& piece : constant_pieces(target, c, params)) {
    total += piece.volume * piece.value.at_zero_sq();
  }
  return total / source.volume(params.p());
}

double transition_prob_spheres(int r, int v, double t, const PrimeParams& params) {
  if (r < 0 || v < 0) throw std::invalid_argument("transition_prob_spheres: negative index");
  return transition_probability(Region::sphere(r), Region::sphere(v), t, params);
}

Rational transition_prob_spheres_at_zero(int r, int v, const PrimeParams& params) {
  if (r < 0 || v < 0) throw std::invalid_argument("transition_prob_spheres: negative index");
  return transition_probability_at_zero(Region::sphere(r), Region::sphere(v), params);
}

namespace {

void check_infinite_column(int v, int truncation) {
  if (v < 0) throw std::invalid_argument("transition_matrix_K_infinity: negative source");
  if (truncation < v + 2) {
    throw std::invalid_argument("transition_matrix_K_infinity: truncation J = " +
                                std::to_string(truncation) + " must be at least v + 2 = " +
                                std::to_string(v + 2));
  }
}

void check_finite_source(const Vertex& source, int R0) {
  const auto graph = WalkGraph::finite(R0);
  if (!graph.has_vertex(source)) {
    throw std::invalid_argument("transition_probs_K_R0: " + source.label() +
                                " is not a vertex of K_" + std::to_string(R0));
  }
}

}  // namespace

TransitionColumn transition_matrix_K_infinity(int v, double t, int truncation,
                                              const PrimeParams& params) {
  check_infinite_column(v, truncation);
  TransitionColumn col{Region::sphere(v), t, {}, 0.0};
  for (int r = 0; r < truncation; ++r) {
    col.probs.emplace_back(Region::sphere(r), transition_prob_spheres(r, v, t, params));
  }
  // Beyond J the state is constant on the whole ball p^J Z_p.
  col.tail = transition_probability(Region::ball(truncation), Region::sphere(v), t, params);
  return col;
}

ExactTransitionColumn transition_matrix_K_infinity_at_zero(int v, int truncation,
                                                           const PrimeParams& params) {
  check_infinite_column(v, truncation);
  ExactTransitionColumn col{Region::sphere(v), {}, Rational(0)};
  for (int r = 0; r < truncation; ++r) {
    col.probs.emplace_back(Region::sphere(r), transition_prob_spheres_at_zero(r, v, params));
  }
  col.tail = transition_probability_at_zero(Region::ball(truncation), Region::sphere(v), params);
  return col;
}

TransitionColumn transition_probs_K_R0(const Vertex& source, double t, int R0,
                                       const PrimeParams& params) {
  check_finite_source(source, R0);
  TransitionColumn col{source, t, {}, 0.0};
  for (const auto& target : WalkGraph::finite(R0).vertices()) {
    col.probs.emplace_back(target, transition_probability(target, source, t, params));
  }
  return col;
}

ExactTransitionColumn transition_probs_K_R0_at_zero(const Vertex& source, int R0,
                                                    const PrimeParams& params) {
  check_finite_source(source, R0);
  ExactTransitionColumn col{source, {}, Rational(0)};
  for (const auto& target : WalkGraph::finite(R0).vertices()) {
    col.probs.emplace_back(target, transition_probability_at_zero(target, source, params));
  }
  return col;
}

double overlap_prob_construction1(const Vertex& target, const Vertex& source, double t,
                                  const WalkGraph& graph, const PrimeParams& params) {
  params.require_unit_line("overlap_prob_construction1");
  if (!graph.has_vertex(target) || !graph.has_vertex(source)) {
    throw std::invalid_argument("overlap_prob_construction1: vertex not in graph");
  }
  const auto a = closed_form_expansion(target, params);
  const auto b = closed_form_expansion(source, params);
  PhaseSum sum;
  sum.add((a.c0 * b.c0).to_rational(), ground_level(params));
  const int top = std::min(a.max_scale, b.max_scale);
  for (int m = 0; m <= top; ++m) {
    sum.add(Rational(params.p() - 1) * (a.at(m) * b.at(m)).to_rational(), scale_level(m, params));
  }
  const Rational scales = Rational(1) / (target.volume(params.p()) * source.volume(params.p()));
  return static_cast<double>(scales.to_long_double() * sum.modulus_sq(t));
}

double born_oracle_probability(const Vertex& target, const Vertex& source, double t,
                               const PrimeParams& params, const QuadratureOptions& opts) {
  const std::int64_t p = params.p();
  ExactLocallyConstantFn indicator = source.kind == Region::Kind::Sphere
                                         ? sphere_indicator(source.index, params)
                                         : ball_indicator(source.index, params);
  // One scale past the last nonzero coefficient, so its vanishing is checked too.
  const int cutoff = source.kind == Region::Kind::Sphere ? source.index + 1 : source.index;
  const auto coeffs = expand_radial(indicator, cutoff, params, opts);
  const auto state = solve_cauchy(coeffs, t, params, Rational(1) / source.volume(p));
  return born_probability(state, target, opts);
}

Eigen::MatrixXd farhi_gutmann_complete_graph(int n_vertices, double gamma, double t) {
  if (n_vertices < 2) throw std::invalid_argument("farhi_gutmann: need at least 2 vertices");
  if (!(gamma > 0.0)) throw std::invalid_argument("farhi_gutmann: gamma must be > 0");
  const double n = n_vertices;
  // Eigenvalues 0 (uniform vector) and n gamma (its complement).
  const std::complex<double> phase = energy_phase(static_cast<long double>(n) * gamma, t);
  const double off = std::norm(1.0 - phase) / (n * n);
  const double diag = std::norm(1.0 + (n - 1.0) * phase) / (n * n);
  Eigen::MatrixXd probs = Eigen::MatrixXd::Constant(n_vertices, n_vertices, off);
  probs.diagonal().setConstant(diag);
  return probs;
}

Eigen::MatrixXcd farhi_gutmann_hamiltonian(int n_vertices, double gamma) {
  if (n_vertices < 2) throw std::invalid_argument("farhi_gutmann: need at least 2 vertices");
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Constant(n_vertices, n_vertices, -gamma);
  h.diagonal().setConstant((n_vertices - 1) * gamma);
  return h;
}

Eigen::MatrixXd farhi_gutmann_dense(int n_vertices, double gamma, double t) {
  const Eigen::MatrixXcd generator =
      farhi_gutmann_hamiltonian(n_vertices, gamma) * std::complex<double>(0.0, -t);
  const Eigen::MatrixXcd unitary = generator.exp();
  return unitary.cwiseAbs2();
}

}  // namespace padicqm
