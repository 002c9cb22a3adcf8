// Copyright 2026 the lpcoh authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LPCOH_DIRICHLET_HPP_
#define LPCOH_DIRICHLET_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpcoh/graph.hpp"

namespace lpcoh {

/// Real-valued function on the vertices of a Graph.
struct VertexFunction {
  std::vector<double> values;

  /// Optional certificate that adjacent-pair differences beyond the ball
  /// decay like lipschitz * max(1, min(|x|,|y|))^-beta.
  struct RadialTail {
    double lipschitz;
    double beta;
  };
  std::optional<RadialTail> radial_tail;

  static VertexFunction zeros(const Graph& g) {
    return VertexFunction{std::vector<double>(g.num_vertices(), 0.0), {}};
  }
};

/// Antisymmetric function on ordered adjacent pairs, stored in parallel with
/// the graph's adjacency lists. Houses both 1-cocycles c(x,y) = f(x) - f(y)
/// and 1-cycles (flows).
struct EdgeChain {
  std::vector<std::vector<double>> values;  // values[u][i] is s(u, adj[u][i])

  static EdgeChain zeros(const Graph& g);
  double get(const Graph& g, std::int32_t u, std::int32_t v) const;
  /// Sets s(u,v) = value and s(v,u) = -value.
  void set(const Graph& g, std::int32_t u, std::int32_t v, double value);
};

struct EnergyReport {
  double p = 0.0;
  double energy = 0.0;
  /// Max |Delta_p f| over interior free vertices; NaN when there are none.
  double max_residual = 0.0;
  int iterations = 0;
};

/// c(x,y) = f(x) - f(y) on all ordered adjacent pairs.
EdgeChain gradient(const VertexFunction& f, const Graph& g);

/// Sum over ordered adjacent pairs of |f(x)-f(y)|^p (each edge counted twice).
double p_energy(const VertexFunction& f, const Graph& g, double p);

/// Coarse p-Laplacian at an interior vertex:
///   (1/(1+deg(x))) * sum_{y ~ x} |f(x)-f(y)|^{p-2} (f(x)-f(y)).
double p_laplacian(const VertexFunction& f, const Graph& g, double p, std::int32_t x);

/// Dirichlet data: (vertex, value) pairs; each vertex at most once.
using BoundaryValues = std::vector<std::pair<std::int32_t, double>>;

/// Minimizes the p-Dirichlet energy over the free vertices by cyclic
/// coordinate descent (each vertex update solves its strictly convex 1-D
/// problem by bisection on the monotone derivative). Deterministic: ascending
/// vertex order, fixed summation order, no parallelism.
/// Throws ConvergenceError when max_iter sweeps do not reach tol.
std::pair<VertexFunction, EnergyReport> solve_p_harmonic(
    const Graph& g, const BoundaryValues& boundary, double p, double tol,
    int max_iter);

inline double default_tolerance(double p) { return p == 2.0 ? 1e-9 : 1e-7; }

/// Bilinear pairing <c,s> = sum over ordered adjacent pairs of c(x,y)s(x,y).
double coupling(const EdgeChain& c, const EdgeChain& s, const Graph& g);

/// div(s)(x) = sum_{y ~ x} s(x,y).
double divergence(const EdgeChain& s, const Graph& g, std::int32_t x);

/// lq norm over ordered adjacent pairs.
double chain_norm(const EdgeChain& s, const Graph& g, double q);

/// Holder-duality certificate |<c,s>| / ||s||_q with 1/p + 1/q = 1.
/// Requires s divergence-free at every interior vertex and ||s||_q > 0.
double nonvanishing_lower_bound(const EdgeChain& c, const EdgeChain& s,
                                const Graph& g, double p);

// --- external interfaces ---

void write_vertex_function_csv(std::ostream& os, const VertexFunction& f);
VertexFunction read_vertex_function_csv(std::istream& is, const Graph& g);
/// One row "u,v,value" per unordered edge (u < v); the reverse orientation is
/// implied by antisymmetry.
void write_edge_chain_csv(std::ostream& os, const EdgeChain& s, const Graph& g);
EdgeChain read_edge_chain_csv(std::istream& is, const Graph& g);
/// {"p":..., "energy":..., "max_residual":..., "iterations":...}
std::string energy_report_json(const EnergyReport& report);

/// "vertex,value" rows restricted to the boundary set.
BoundaryValues read_boundary_csv(std::istream& is, const Graph& g);

}  // namespace lpcoh

#endif  // LPCOH_DIRICHLET_HPP_
