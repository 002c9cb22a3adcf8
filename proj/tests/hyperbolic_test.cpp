// Copyright 2026 the lpcoh authors
// SPDX-License-Identifier: Apache-2.0

#include "lpcoh/hyperbolic.hpp"

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include <doctest.h>

#include "lpcoh/dirichlet.hpp"
#include "lpcoh/errors.hpp"
#include "lpcoh/graph.hpp"

using lpcoh::BoundaryFunction;
using lpcoh::BudgetError;
using lpcoh::build_tree_ball;
using lpcoh::EdgeChain;
using lpcoh::Graph;
using lpcoh::TreeBall;
using lpcoh::TreeFlow;
using lpcoh::unit_flow_cycle;
using lpcoh::ValidationError;
using lpcoh::VertexFunction;

TEST_CASE("tree ball shape") {
  CHECK(build_tree_ball(1).graph.num_vertices() == 4);
  CHECK(build_tree_ball(2).graph.num_vertices() == 10);
  for (int D = 1; D <= 10; ++D) {
    const TreeBall t = build_tree_ball(D);
    CHECK(t.graph.num_vertices() == 1 + 3 * ((1 << D) - 1));
    CHECK(static_cast<int>(t.leaves.size()) == 3 * (1 << (D - 1)));
    t.graph.validate();
    // the root has degree 3; every other non-leaf vertex has degree 3;
    // leaves have degree 1.
    for (std::int32_t v = 0; v < t.graph.num_vertices(); ++v) {
      CHECK(t.graph.degree(v) == (t.vertex_depth(v) == D ? 1 : 3));
    }
    // the ball is acyclic: |E| = |V| - 1
    std::int64_t degree_sum = 0;
    for (std::int32_t v = 0; v < t.graph.num_vertices(); ++v) degree_sum += t.graph.degree(v);
    CHECK(degree_sum == 2 * (t.graph.num_vertices() - 1));
  }
  CHECK_THROWS_AS(build_tree_ball(0), ValidationError);
  CHECK_THROWS_AS(build_tree_ball(10, 100), BudgetError);
}

TEST_CASE("the distinguished edge splits the ball 1 : 2") {
  const TreeBall t = build_tree_ball(5);
  CHECK(t.edge_x1 == 0);
  CHECK(t.parent[t.edge_x2] == 0);
  CHECK(t.in_t2[t.edge_x2] == 1);
  CHECK(t.in_t2[0] == 0);
  std::int64_t t2_count = 0;
  for (char b : t.in_t2) t2_count += b;
  CHECK(t2_count == (1 << t.depth) - 1);  // a full binary subtree of depth D-1
}

TEST_CASE("DCA depth equals the graph-core Gromov product") {
  const TreeBall t = build_tree_ball(6);
  // In a tree the in-ball distance equals the true distance for every pair,
  // so the truncation caveat does not apply; lift it for the cross-check.
  Graph complete = t.graph;
  complete.interior_radius = Graph::kComplete;
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    const auto u = static_cast<std::int32_t>(rng() % complete.num_vertices());
    const auto v = static_cast<std::int32_t>(rng() % complete.num_vertices());
    CHECK(static_cast<double>(lpcoh::dca_depth(t, u, v)) ==
          lpcoh::gromov_product(complete, u, v));
  }
  CHECK(lpcoh::estimate_hyperbolicity(t.graph, 3000, 9) == 0.0);
}

TEST_CASE("unit flow: divergence, flux, and the closed-form norm") {
  for (int D : {1, 2, 4, 6}) {
    const TreeBall t = build_tree_ball(D);
    const TreeFlow s = unit_flow_cycle(t, 2.0);

    CHECK(s.chain.get(t.graph, t.edge_x1, t.edge_x2) == 1.0);

    // exactly divergence-free at every interior vertex
    for (std::int32_t v = 0; v < t.graph.num_vertices(); ++v) {
      if (t.graph.is_interior(v)) CHECK(lpcoh::divergence(s.chain, t.graph, v) == 0.0);
    }

    // flux across every level cut separating the two sides is 1: enumerate
    // the cut of edges at each combinatorial distance from e.
    for (int level = 1; level <= D - 1; ++level) {
      double t2_flux = 0.0, t1_flux = 0.0;
      for (std::int32_t w = 1; w < t.graph.num_vertices(); ++w) {
        const auto u = t.parent[w];
        if (t.in_t2[w] && w != t.edge_x2 && t.vertex_depth(w) - 1 == level) {
          t2_flux += s.chain.get(t.graph, u, w);
        }
        if (!t.in_t2[w] && t.vertex_depth(w) == level) {
          t1_flux += s.chain.get(t.graph, w, u);
        }
      }
      CHECK(t2_flux == doctest::Approx(1.0).epsilon(1e-15));
      CHECK(t1_flux == doctest::Approx(1.0).epsilon(1e-15));
    }
  }

  // the l^q norm matches the geometric closed form
  for (int D : {4, 7, 10}) {
    const TreeBall t = build_tree_ball(D);
    for (double q : {4.0 / 3.0, 2.0, 3.0}) {
      const TreeFlow s = unit_flow_cycle(t, q);
      const double norm_pow = std::pow(lpcoh::chain_norm(s.chain, t.graph, q), q);
      CHECK(norm_pow ==
            doctest::Approx(lpcoh::flow_norm_closed_form_q_pow(D, q)).epsilon(1e-12));
    }
  }

  // q = 2, D = 20: within 1e-4 of the infinite-depth limit 6
  CHECK(lpcoh::flow_norm_closed_form_q_pow(20, 2.0) == doctest::Approx(6.0).epsilon(1e-4));

  CHECK_THROWS_AS(unit_flow_cycle(build_tree_ball(3), 1.0), ValidationError);
  CHECK_THROWS_AS(unit_flow_cycle(build_tree_ball(3), 0.5), ValidationError);
}

TEST_CASE("boundary extension") {
  const TreeBall t = build_tree_ball(4);

  SUBCASE("constants extend to constants") {
    BoundaryFunction F{std::vector<double>(t.leaves.size(), 7.0), std::log(2.0), 1.0};
    const VertexFunction f = lpcoh::boundary_extension(F, t);
    for (double v : f.values) CHECK(v == 7.0);
  }

  SUBCASE("T2 indicator: gradient supported exactly on e") {
    const BoundaryFunction F = lpcoh::t2_indicator(t, std::log(2.0));
    const VertexFunction f = lpcoh::boundary_extension(F, t);
    CHECK(f.values[t.edge_x1] == 0.0);  // the root's representative is in T1
    CHECK(f.values[t.edge_x2] == 1.0);
    for (std::int32_t v = 0; v < t.graph.num_vertices(); ++v) {
      CHECK(f.values[v] == (t.in_t2[v] ? 1.0 : 0.0));
    }
    const EdgeChain c = lpcoh::gradient(f, t.graph);
    for (std::int32_t u = 0; u < t.graph.num_vertices(); ++u) {
      for (auto v : t.graph.adj[u]) {
        const bool is_e = (u == t.edge_x1 && v == t.edge_x2) ||
                          (u == t.edge_x2 && v == t.edge_x1);
        CHECK(std::abs(c.get(t.graph, u, v)) == (is_e ? 1.0 : 0.0));
      }
    }
  }

  SUBCASE("cylinder indicators are constant below the cylinder depth") {
    // indicator of the leaves under one depth-2 vertex
    std::int32_t cyl = t.children[t.children[0][0]][0];
    REQUIRE(t.vertex_depth(cyl) == 2);
    BoundaryFunction F{std::vector<double>(t.leaves.size(), 0.0), std::log(2.0), 4.0};
    for (std::size_t i = 0; i < t.leaves.size(); ++i) {
      std::int32_t a = t.leaves[i];
      while (t.vertex_depth(a) > 2) a = t.parent[a];
      if (a == cyl) F.leaf_values[i] = 1.0;
    }
    const VertexFunction f = lpcoh::boundary_extension(F, t);
    for (std::int32_t v = 0; v < t.graph.num_vertices(); ++v) {
      if (t.vertex_depth(v) < 2) continue;
      std::int32_t a = v;
      while (t.vertex_depth(a) > 2) a = t.parent[a];
      CHECK(f.values[v] == (a == cyl ? 1.0 : 0.0));
    }
  }
}

TEST_CASE("visual-metric Lipschitz scan") {
  const TreeBall t = build_tree_ball(6);
  const double eps = std::log(2.0);
  const BoundaryFunction F = lpcoh::t2_indicator(t, eps);
  // leaves on opposite sides of e have Gromov product 0, so the minimal
  // constant is exactly 1, comfortably below the declared K = e^eps = 2.
  CHECK(lpcoh::minimal_lipschitz_constant(F, t) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(F.K == doctest::Approx(2.0));
}

TEST_CASE("extension energy profile and envelopes") {
  const double eps = std::log(2.0);

  SUBCASE("per-depth energy sits under the Gromov envelope") {
    const TreeBall t = build_tree_ball(8);
    // visual-metric test function F(u) = exp(-eps (u|u0)) against a fixed
    // reference leaf u0: K-Lipschitz for a moderate K.
    BoundaryFunction F{std::vector<double>(t.leaves.size(), 0.0), eps, 0.0};
    for (std::size_t i = 0; i < t.leaves.size(); ++i) {
      F.leaf_values[i] = std::exp(-eps * lpcoh::dca_depth(t, t.leaves[i], t.leaves[0]));
    }
    F.K = lpcoh::minimal_lipschitz_constant(F, t);
    REQUIRE(F.K > 0.0);

    for (double p : {2.0, 4.0}) {
      const auto profile = lpcoh::extension_energy_profile(F, t, p);
      for (const auto& row : profile.rows) {
        CHECK(row.energy <= row.envelope_gromov + 1e-12);
        CHECK(row.envelope_paper > 0.0);
      }
    }
  }

  SUBCASE("p eps = 2 ln 2 keeps the total bounded in depth") {
    double previous_total = 0.0;
    std::vector<double> totals;
    for (int D : {8, 10, 12}) {
      const TreeBall t = build_tree_ball(D);
      BoundaryFunction F{std::vector<double>(t.leaves.size(), 0.0), eps, 0.0};
      for (std::size_t i = 0; i < t.leaves.size(); ++i) {
        F.leaf_values[i] = std::exp(-eps * lpcoh::dca_depth(t, t.leaves[i], t.leaves[0]));
      }
      F.K = 1.0;  // only the energies are compared; envelopes are unused here
      totals.push_back(lpcoh::extension_energy_profile(F, t, 2.0).total);  // p eps = 2 ln 2
      (void)previous_total;
    }
    CHECK(totals[1] / totals[0] < 1.05);
    CHECK(totals[2] / totals[1] < 1.05);
  }

  SUBCASE("p eps = 0.5 ln 2: the worst-case envelope diverges geometrically") {
    // With epsilon' = ln2 / 4 declared and p = 2, the per-depth envelope is
    // 6 * 2^n * e^{-2 eps' n} ~ 2^{n/2}: the pair count beats the decay. Any
    // single function (here e^{-eps' (u|u_0)}, which only varies along the
    // branch toward u_0) can have much smaller energy, so we assert growth of
    // the envelope and domination of the measured energy by it.
    const TreeBall t = build_tree_ball(10);
    BoundaryFunction F{std::vector<double>(t.leaves.size(), 0.0), eps / 4.0, 1.0};
    for (std::size_t i = 0; i < t.leaves.size(); ++i) {
      F.leaf_values[i] =
          std::exp(-(eps / 4.0) * lpcoh::dca_depth(t, t.leaves[i], t.leaves[0]));
    }
    const auto profile = lpcoh::extension_energy_profile(F, t, 2.0);
    CHECK(profile.rows[8].envelope_gromov ==
          doctest::Approx(4.0 * profile.rows[4].envelope_gromov).epsilon(1e-12));
    for (const auto& row : profile.rows) CHECK(row.energy <= row.envelope_gromov * (1 + 1e-12));
  }

  SUBCASE("locally constant data has zero deep energy") {
    const TreeBall t = build_tree_ball(5);
    const BoundaryFunction F = lpcoh::t2_indicator(t, eps);  // constant beyond depth 0
    const auto profile = lpcoh::extension_energy_profile(F, t, 3.0);
    CHECK(profile.rows[0].energy == 2.0);  // the edge e, two ordered pairs
    for (std::size_t n = 1; n < profile.rows.size(); ++n) CHECK(profile.rows[n].energy == 0.0);
  }
}

TEST_CASE("nonvanishing certificate") {
  SUBCASE("coupling is -2 at every depth and the bound is Holder-consistent") {
    for (int D = 2; D <= 10; ++D) {
      const auto cert = lpcoh::nonvanishing_certificate(build_tree_ball(D), 4.0);
      CHECK(cert.coupling == -2.0);
      CHECK(cert.q == doctest::Approx(4.0 / 3.0));
      CHECK(cert.lower_bound ==
            doctest::Approx(2.0 / std::pow(lpcoh::flow_norm_closed_form_q_pow(D, 4.0 / 3.0),
                                           3.0 / 4.0))
                .epsilon(1e-12));
    }
  }

  SUBCASE("p = q = 2 approaches 2/sqrt(6)") {
    const auto cert = lpcoh::nonvanishing_certificate(build_tree_ball(14), 2.0);
    CHECK(cert.lower_bound == doctest::Approx(2.0 / std::sqrt(6.0)).epsilon(1e-3));
  }

  SUBCASE("flow norm is monotone increasing in depth (stability)") {
    double previous = 0.0;
    for (int D = 2; D <= 12; ++D) {
      const double norm_pow = lpcoh::flow_norm_closed_form_q_pow(D, 4.0 / 3.0);
      CHECK(norm_pow > previous);
      previous = norm_pow;
    }
  }

  SUBCASE("Holder duality holds for the certificate pair") {
    const TreeBall t = build_tree_ball(8);
    const double p = 4.0, q = p / (p - 1.0);
    const BoundaryFunction F = lpcoh::t2_indicator(t, std::log(2.0));
    const VertexFunction f = lpcoh::boundary_extension(F, t);
    const EdgeChain c = lpcoh::gradient(f, t.graph);
    const TreeFlow s = unit_flow_cycle(t, q);
    CHECK(std::abs(lpcoh::coupling(c, s.chain, t.graph)) <=
          lpcoh::chain_norm(c, t.graph, p) * lpcoh::chain_norm(s.chain, t.graph, q) + 1e-12);
  }

  SUBCASE("coboundary annihilation for deeply interior functions") {
    const TreeBall t = build_tree_ball(8);
    const TreeFlow s = unit_flow_cycle(t, 2.0);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
      VertexFunction f = VertexFunction::zeros(t.graph);
      for (std::int32_t v = 0; v < t.graph.num_vertices(); ++v) {
        // integer values on vertices of depth <= D - 2 keep the pairing exact
        if (t.vertex_depth(v) <= t.depth - 2) {
          f.values[v] = static_cast<double>(static_cast<int>(rng() % 9)) - 4.0;
        }
      }
      CHECK(lpcoh::coupling(lpcoh::gradient(f, t.graph), s.chain, t.graph) == 0.0);
    }
  }

  SUBCASE("JSON report carries the full certificate") {
    const auto cert = lpcoh::nonvanishing_certificate(build_tree_ball(4), 2.0);
    const std::string json = lpcoh::nonvanishing_certificate_json(cert);
    for (const char* key : {"\"p\"", "\"q\"", "\"depth\"", "\"coupling\"",
                            "\"flow_norm_q\"", "\"lower_bound\""}) {
      CHECK(json.find(key) != std::string::npos);
    }
  }
}
