// Copyright 2026 the lpcoh authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LPCOH_HYPERBOLIC_HPP_
#define LPCOH_HYPERBOLIC_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "lpcoh/dirichlet.hpp"
#include "lpcoh/graph.hpp"

namespace lpcoh {

/// Depth-D ball of the 3-regular tree rooted at vertex 0, with the
/// distinguished edge e = (x1, x2) where x1 is the root and x2 its last
/// child. T2 is the subtree below x2; T1 is everything else.
///
/// interior_radius is D - 1: the unit flow through e is truncated at
/// combinatorial distance D - 1 from e on both sides, which makes the
/// depth-(D-1) vertices on the T1 side flow sources — so both the last two
/// depth levels are declared boundary.
struct TreeBall {
  Graph graph;
  int depth = 0;
  std::vector<std::int32_t> parent;                 // -1 at the root
  std::vector<std::vector<std::int32_t>> children;  // creation order
  std::vector<std::int32_t> leaves;                 // depth-D vertices
  std::int32_t edge_x1 = 0;
  std::int32_t edge_x2 = 0;
  std::vector<char> in_t2;  // 1 on x2 and its descendants

  std::int32_t vertex_depth(std::int32_t v) const { return graph.word_length[v]; }
};

/// Vertex count 1 + 3 (2^D - 1).
TreeBall build_tree_ball(int D, std::int64_t vertex_budget = kDefaultVertexBudget);

/// Depth of the deepest common ancestor — the exact Gromov product (u|v)
/// relative to the root for any two vertices of a tree.
std::int32_t dca_depth(const TreeBall& t, std::int32_t u, std::int32_t v);

/// Real values on the ends (leaf representatives), Lipschitz for the visual
/// metric: |F(u) - F(v)| <= K exp(-epsilon (u|v)) for all leaf pairs.
struct BoundaryFunction {
  std::vector<double> leaf_values;  // parallel to TreeBall::leaves
  double epsilon = 0.0;
  double K = 0.0;
};

/// max over leaf pairs of |F(u) - F(v)| exp(epsilon (u|v)); the invariant
/// holds iff this is <= K. Full pairwise scan.
double minimal_lipschitz_constant(const BoundaryFunction& F, const TreeBall& t);

/// Indicator of the T2-ends: 1 on leaves below x2, 0 elsewhere. Satisfies the
/// Lipschitz invariant with K = exp(epsilon) since leaves on opposite sides
/// of e have Gromov product 0.
BoundaryFunction t2_indicator(const TreeBall& t, double epsilon);

struct TreeFlow {
  EdgeChain chain;
  double q = 0.0;
};

/// Dyadic equal-splitting unit flow through e, oriented T1 -> T2, truncated
/// at combinatorial distance D - 1 from e on both sides: the edge at
/// distance n carries flux 2^{-n}, divergence is 0 at every interior vertex,
/// and ||s||_q^q = 2 (1 + 2 sum_{n=1}^{D-1} 2^n 2^{-nq}) over ordered pairs.
TreeFlow unit_flow_cycle(const TreeBall& t, double q);

/// The closed form above (exact geometric sum).
double flow_norm_closed_form_q_pow(int D, double q);

/// f(x) = F(u_x) where u_x is the lexicographically first (= first-created)
/// descendant leaf of x. The root's representative lies in T1.
VertexFunction boundary_extension(const BoundaryFunction& F, const TreeBall& t);

/// Per-depth p-energy of the extension, with two theoretical envelopes over
/// the 2 * 3 * 2^n ordered adjacent pairs at depth n:
///  - gromov: K^p exp(-p epsilon n) per pair (provable: the leaf
///    representatives of adjacent vertices at depths n, n+1 branch at depth
///    >= n);
///  - paper-form: K^p exp(-2 p epsilon n + 2 p epsilon) per pair (the
///    looser bookkeeping via exp(-2 epsilon |x|) with C = 0).
struct EnergyProfile {
  struct Row {
    int depth = 0;       // min endpoint depth of the pairs counted
    double energy = 0.0;
    double envelope_gromov = 0.0;
    double envelope_paper = 0.0;
  };
  double p = 0.0;
  double total = 0.0;
  std::vector<Row> rows;
};
EnergyProfile extension_energy_profile(const BoundaryFunction& F, const TreeBall& t, double p);

/// The full quantitative non-vanishing certificate at exponent p: couples
/// the gradient of the T2-indicator extension against the unit l^q flow
/// (1/p + 1/q = 1). coupling = +-2 (only e carries both chains);
/// lower_bound = |coupling| / ||s||_q.
struct NonvanishingCertificate {
  double p = 0.0;
  double q = 0.0;
  int depth = 0;
  double coupling = 0.0;
  double flow_norm_q = 0.0;
  double lower_bound = 0.0;
};
NonvanishingCertificate nonvanishing_certificate(const TreeBall& t, double p);

/// {"p":..,"q":..,"depth":..,"coupling":..,"flow_norm_q":..,"lower_bound":..}
std::string nonvanishing_certificate_json(const NonvanishingCertificate& cert);

}  // namespace lpcoh

#endif  // LPCOH_HYPERBOLIC_HPP_
