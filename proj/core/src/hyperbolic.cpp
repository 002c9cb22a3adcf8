// Copyright 2026 the lpcoh authors
// SPDX-License-Identifier: Apache-2.0

#include "lpcoh/hyperbolic.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "lpcoh/errors.hpp"

namespace lpcoh {

TreeBall build_tree_ball(int D, std::int64_t vertex_budget) {
  if (D < 1) throw ValidationError("tree depth must be >= 1");
  if (D > 40) throw BudgetError("tree depth too large");
  const std::int64_t count = 1 + 3 * ((std::int64_t{1} << D) - 1);
  if (count > vertex_budget) {
    throw BudgetError("tree ball exceeds vertex budget (" + std::to_string(count) +
                      " > " + std::to_string(vertex_budget) + ")");
  }

  TreeBall t;
  t.depth = D;
  const auto n = static_cast<std::int32_t>(count);
  t.graph.adj.assign(n, {});
  t.graph.word_length.assign(n, 0);
  t.graph.base = 0;
  t.graph.interior_radius = D - 1;
  t.parent.assign(n, -1);
  t.children.assign(n, {});

  std::int32_t next = 1;
  std::vector<std::int32_t> frontier{0};
  for (int depth = 1; depth <= D; ++depth) {
    std::vector<std::int32_t> layer;
    for (auto u : frontier) {
      const int fanout = u == 0 ? 3 : 2;
      for (int i = 0; i < fanout; ++i) {
        const std::int32_t v = next++;
        t.graph.word_length[v] = depth;
        t.parent[v] = u;
        t.children[u].push_back(v);
        t.graph.add_edge(u, v);
        layer.push_back(v);
      }
    }
    frontier = std::move(layer);
  }
  t.leaves = frontier;

  t.edge_x1 = 0;
  t.edge_x2 = t.children[0].back();
  t.in_t2.assign(n, 0);
  t.in_t2[t.edge_x2] = 1;
  for (std::int32_t v = t.edge_x2 + 1; v < n; ++v) {
    t.in_t2[v] = t.in_t2[t.parent[v]];
  }
  return t;
}

std::int32_t dca_depth(const TreeBall& t, std::int32_t u, std::int32_t v) {
  while (t.vertex_depth(u) > t.vertex_depth(v)) u = t.parent[u];
  while (t.vertex_depth(v) > t.vertex_depth(u)) v = t.parent[v];
  while (u != v) {
    u = t.parent[u];
    v = t.parent[v];
  }
  return t.vertex_depth(u);
}

double minimal_lipschitz_constant(const BoundaryFunction& F, const TreeBall& t) {
  if (F.leaf_values.size() != t.leaves.size()) {
    throw ValidationError("boundary function does not match the leaf set");
  }
  double best = 0.0;
  for (std::size_t i = 0; i < t.leaves.size(); ++i) {
    for (std::size_t j = i + 1; j < t.leaves.size(); ++j) {
      const double gap = std::abs(F.leaf_values[i] - F.leaf_values[j]);
      if (gap == 0.0) continue;
      const auto product = dca_depth(t, t.leaves[i], t.leaves[j]);
      best = std::max(best, gap * std::exp(F.epsilon * product));
    }
  }
  return best;
}

BoundaryFunction t2_indicator(const TreeBall& t, double epsilon) {
  BoundaryFunction F;
  F.epsilon = epsilon;
  F.K = std::exp(epsilon);
  F.leaf_values.reserve(t.leaves.size());
  for (auto leaf : t.leaves) F.leaf_values.push_back(t.in_t2[leaf] ? 1.0 : 0.0);
  return F;
}

TreeFlow unit_flow_cycle(const TreeBall& t, double q) {
  if (!(q > 1.0)) throw ValidationError("flow exponent q must be > 1");
  TreeFlow s{EdgeChain::zeros(t.graph), q};
  s.chain.set(t.graph, t.edge_x1, t.edge_x2, 1.0);
  const std::int32_t n = t.graph.num_vertices();
  for (std::int32_t w = 1; w < n; ++w) {
    const auto u = t.parent[w];
    const auto dw = t.vertex_depth(w);
    if (t.in_t2[w]) {
      if (w == t.edge_x2) continue;  // the edge e itself
      // Distance of (u, w) from e is depth(w) - 1; always <= D - 1 here.
      s.chain.set(t.graph, u, w, std::pow(2.0, -(dw - 1)));
    } else {
      // T1 side: edge (u, w) is at distance depth(w) from e and the flow is
      // oriented toward the root. Truncate beyond distance D - 1.
      if (dw > t.depth - 1) continue;
      s.chain.set(t.graph, w, u, std::pow(2.0, -dw));
    }
  }
  return s;
}

double flow_norm_closed_form_q_pow(int D, double q) {
  double sum = 0.0;
  for (int n = 1; n <= D - 1; ++n) {
    sum += std::pow(2.0, n * (1.0 - q));
  }
  return 2.0 * (1.0 + 2.0 * sum);
}

VertexFunction boundary_extension(const BoundaryFunction& F, const TreeBall& t) {
  if (F.leaf_values.size() != t.leaves.size()) {
    throw ValidationError("boundary function does not match the leaf set");
  }
  std::vector<double> leaf_value(t.graph.num_vertices(), 0.0);
  for (std::size_t i = 0; i < t.leaves.size(); ++i) {
    leaf_value[t.leaves[i]] = F.leaf_values[i];
  }
  VertexFunction f = VertexFunction::zeros(t.graph);
  for (std::int32_t v = 0; v < t.graph.num_vertices(); ++v) {
    std::int32_t rep = v;
    while (!t.children[rep].empty()) rep = t.children[rep].front();
    f.values[v] = leaf_value[rep];
  }
  return f;
}

EnergyProfile extension_energy_profile(const BoundaryFunction& F, const TreeBall& t,
                                       double p) {
  if (!(p > 1.0)) throw ValidationError("energy exponent p must be > 1");
  const VertexFunction f = boundary_extension(F, t);
  EnergyProfile profile;
  profile.p = p;
  profile.rows.resize(t.depth);
  for (std::int32_t u = 0; u < t.graph.num_vertices(); ++u) {
    for (auto v : t.graph.adj[u]) {
      const int depth = std::min(t.vertex_depth(u), t.vertex_depth(v));
      profile.rows[depth].energy += std::pow(std::abs(f.values[u] - f.values[v]), p);
    }
  }
  for (int n = 0; n < t.depth; ++n) {
    auto& row = profile.rows[n];
    row.depth = n;
    const double pairs = 2.0 * 3.0 * std::pow(2.0, n);
    const double kp = std::pow(F.K, p);
    row.envelope_gromov = pairs * kp * std::exp(-p * F.epsilon * n);
    row.envelope_paper = pairs * kp * std::exp(-2.0 * p * F.epsilon * n + 2.0 * p * F.epsilon);
    profile.total += row.energy;
  }
  return profile;
}

NonvanishingCertificate nonvanishing_certificate(const TreeBall& t, double p) {
  if (!(p > 1.0)) throw ValidationError("exponent p must be > 1");
  const double q = p / (p - 1.0);
  const BoundaryFunction F = t2_indicator(t, std::log(2.0));
  const VertexFunction f = boundary_extension(F, t);
  const EdgeChain c = gradient(f, t.graph);
  const TreeFlow s = unit_flow_cycle(t, q);

  NonvanishingCertificate cert;
  cert.p = p;
  cert.q = q;
  cert.depth = t.depth;
  cert.coupling = coupling(c, s.chain, t.graph);
  cert.flow_norm_q = chain_norm(s.chain, t.graph, q);
  cert.lower_bound = nonvanishing_lower_bound(c, s.chain, t.graph, p);
  return cert;
}

std::string nonvanishing_certificate_json(const NonvanishingCertificate& cert) {
  nlohmann::ordered_json j;
  j["p"] = cert.p;
  j["q"] = cert.q;
  j["depth"] = cert.depth;
  j["coupling"] = cert.coupling;
  j["flow_norm_q"] = cert.flow_norm_q;
  j["lower_bound"] = cert.lower_bound;
  return j.dump(2);
}

}  // namespace lpcoh
