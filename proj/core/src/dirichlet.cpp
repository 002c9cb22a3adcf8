// Copyright 2026 the lpcoh authors
// SPDX-License-Identifier: Apache-2.0

#include "lpcoh/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <iostream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "lpcoh/errors.hpp"

namespace lpcoh {

namespace {

std::int32_t neighbor_slot(const Graph& g, std::int32_t u, std::int32_t v) {
  const auto& nu = g.adj[u];
  auto it = std::find(nu.begin(), nu.end(), v);
  if (it == nu.end()) throw ValidationError("not an edge");
  return static_cast<std::int32_t>(it - nu.begin());
}

void check_shape(const VertexFunction& f, const Graph& g) {
  if (static_cast<std::int32_t>(f.values.size()) != g.num_vertices()) {
    throw ValidationError("vertex function shape mismatch");
  }
}

void check_shape(const EdgeChain& s, const Graph& g) {
  if (s.values.size() != g.adj.size()) throw ValidationError("edge chain shape mismatch");
  for (std::size_t u = 0; u < s.values.size(); ++u) {
    if (s.values[u].size() != g.adj[u].size()) {
      throw ValidationError("edge chain shape mismatch");
    }
  }
}

// |t|^{p-2} t, with the t = 0 case defined as 0 (matters for p < 2).
double signed_power(double t, double p) {
  if (t == 0.0) return 0.0;
  return std::copysign(std::pow(std::abs(t), p - 1.0), t);
}

}  // namespace

EdgeChain EdgeChain::zeros(const Graph& g) {
  EdgeChain s;
  s.values.resize(g.adj.size());
  for (std::size_t u = 0; u < g.adj.size(); ++u) s.values[u].assign(g.adj[u].size(), 0.0);
  return s;
}

double EdgeChain::get(const Graph& g, std::int32_t u, std::int32_t v) const {
  return values[u][neighbor_slot(g, u, v)];
}

void EdgeChain::set(const Graph& g, std::int32_t u, std::int32_t v, double value) {
  values[u][neighbor_slot(g, u, v)] = value;
  values[v][neighbor_slot(g, v, u)] = -value;
}

EdgeChain gradient(const VertexFunction& f, const Graph& g) {
  check_shape(f, g);
  EdgeChain c = EdgeChain::zeros(g);
  for (std::int32_t u = 0; u < g.num_vertices(); ++u) {
    for (std::size_t i = 0; i < g.adj[u].size(); ++i) {
      c.values[u][i] = f.values[u] - f.values[g.adj[u][i]];
    }
  }
  return c;
}

double p_energy(const VertexFunction& f, const Graph& g, double p) {
  check_shape(f, g);
  if (p < 1.0) throw ValidationError("p_energy requires p >= 1");
  double total = 0.0;
  for (std::int32_t u = 0; u < g.num_vertices(); ++u) {
    for (auto v : g.adj[u]) {
      total += std::pow(std::abs(f.values[u] - f.values[v]), p);
    }
  }
  return total;
}

double p_laplacian(const VertexFunction& f, const Graph& g, double p, std::int32_t x) {
  check_shape(f, g);
  if (p <= 1.0) throw ValidationError("p_laplacian requires p > 1");
  if (!g.is_interior(x)) {
    throw ValidationError("p_laplacian at a non-interior vertex (incomplete star)");
  }
  double sum = 0.0;
  for (auto y : g.adj[x]) sum += signed_power(f.values[x] - f.values[y], p);
  return sum / (1.0 + g.degree(x));
}

namespace {

// Minimizes t -> sum_i |t - a_i|^p by bisection on the monotone derivative.
double coordinate_minimizer(const std::vector<double>& a, double p) {
  if (a.empty()) return 0.0;
  if (p == 2.0) {
    double s = 0.0;
    for (double v : a) s += v;
    return s / static_cast<double>(a.size());
  }
  double lo = *std::min_element(a.begin(), a.end());
  double hi = *std::max_element(a.begin(), a.end());
  if (lo == hi) return lo;
  auto deriv = [&](double t) {
    double d = 0.0;
    for (double v : a) d += signed_power(t - v, p);
    return d;
  };
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (deriv(mid) > 0.0 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::pair<VertexFunction, EnergyReport> solve_p_harmonic(
    const Graph& g, const BoundaryValues& boundary, double p, double tol,
    int max_iter) {
  if (p <= 1.0) throw ValidationError("solve_p_harmonic requires p > 1 (p = 1 minimizers are non-unique)");
  if (tol <= 0.0) throw ValidationError("tol must be positive");
  if (boundary.empty()) throw ValidationError("boundary set must be nonempty");
  if (p <= 1.01 || p >= 50.0) {
    std::cerr << "warning: p = " << p << " is badly conditioned for the coordinate solver\n";
  }

  const auto n = g.num_vertices();
  std::vector<char> fixed(n, 0);
  VertexFunction f = VertexFunction::zeros(g);
  double boundary_mean = 0.0;
  for (auto [v, value] : boundary) {
    if (v < 0 || v >= n) throw ValidationError("boundary vertex out of range");
    if (fixed[v]) throw ValidationError("boundary vertex listed twice");
    fixed[v] = 1;
    f.values[v] = value;
    boundary_mean += value;
  }
  boundary_mean /= static_cast<double>(boundary.size());

  std::vector<std::int32_t> free_vertices;
  for (std::int32_t v = 0; v < n; ++v) {
    if (!fixed[v]) {
      free_vertices.push_back(v);
      f.values[v] = boundary_mean;
    }
  }

  std::vector<std::int32_t> residual_vertices;
  for (auto v : free_vertices) {
    if (g.is_interior(v)) residual_vertices.push_back(v);
  }

  EnergyReport report;
  report.p = p;
  if (free_vertices.empty()) {
    report.energy = p_energy(f, g, p);
    report.max_residual = std::numeric_limits<double>::quiet_NaN();
    return {std::move(f), report};
  }

  std::vector<double> neighbor_values;
  double residual = std::numeric_limits<double>::infinity();
  int sweep = 0;
  for (; sweep < max_iter; ++sweep) {
    for (auto v : free_vertices) {
      neighbor_values.clear();
      for (auto y : g.adj[v]) neighbor_values.push_back(f.values[y]);
      f.values[v] = coordinate_minimizer(neighbor_values, p);
    }
    residual = 0.0;
    for (auto v : residual_vertices) {
      residual = std::max(residual, std::abs(p_laplacian(f, g, p, v)));
    }
    if (residual <= tol) break;
  }
  report.iterations = std::min(sweep + 1, max_iter);
  report.energy = p_energy(f, g, p);
  report.max_residual = residual_vertices.empty()
                            ? std::numeric_limits<double>::quiet_NaN()
                            : residual;
  if (!residual_vertices.empty() && residual > tol) {
    throw ConvergenceError("p-harmonic solver did not converge (residual " +
                               std::to_string(residual) + " after " +
                               std::to_string(max_iter) + " sweeps)",
                           residual, max_iter);
  }
  return {std::move(f), report};
}

double coupling(const EdgeChain& c, const EdgeChain& s, const Graph& g) {
  check_shape(c, g);
  check_shape(s, g);
  double total = 0.0;
  for (std::size_t u = 0; u < g.adj.size(); ++u) {
    for (std::size_t i = 0; i < g.adj[u].size(); ++i) {
      total += c.values[u][i] * s.values[u][i];
    }
  }
  return total;
}

double divergence(const EdgeChain& s, const Graph& g, std::int32_t x) {
  double d = 0.0;
  for (std::size_t i = 0; i < g.adj[x].size(); ++i) d += s.values[x][i];
  return d;
}

double chain_norm(const EdgeChain& s, const Graph& g, double q) {
  check_shape(s, g);
  if (q < 1.0) throw ValidationError("chain_norm requires q >= 1");
  double total = 0.0;
  for (std::size_t u = 0; u < g.adj.size(); ++u) {
    for (double v : s.values[u]) total += std::pow(std::abs(v), q);
  }
  return std::pow(total, 1.0 / q);
}

double nonvanishing_lower_bound(const EdgeChain& c, const EdgeChain& s,
                                const Graph& g, double p) {
  if (p <= 1.0) throw ValidationError("requires p > 1");
  const double q = p / (p - 1.0);
  double max_div = 0.0;
  for (std::int32_t x = 0; x < g.num_vertices(); ++x) {
    if (g.is_interior(x)) max_div = std::max(max_div, std::abs(divergence(s, g, x)));
  }
  if (max_div != 0.0) {
    throw ValidationError("cycle is not divergence-free at interior vertices (max divergence " +
                          std::to_string(max_div) + ")");
  }
  const double norm = chain_norm(s, g, q);
  if (norm == 0.0) throw ValidationError("cycle has zero norm");
  return std::abs(coupling(c, s, g)) / norm;
}

// --- external interfaces ---

namespace {

void write_double(std::ostream& os, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  os << buf;
}

}  // namespace

void write_vertex_function_csv(std::ostream& os, const VertexFunction& f) {
  os << "vertex,value\n";
  for (std::size_t v = 0; v < f.values.size(); ++v) {
    os << v << ',';
    write_double(os, f.values[v]);
    os << '\n';
  }
}

VertexFunction read_vertex_function_csv(std::istream& is, const Graph& g) {
  VertexFunction f = VertexFunction::zeros(g);
  std::vector<char> seen(g.num_vertices(), 0);
  std::string line;
  if (!std::getline(is, line) || line != "vertex,value") {
    throw ValidationError("expected 'vertex,value' header");
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::int32_t v;
    char comma;
    double value;
    ls >> v >> comma >> value;
    if (ls.fail() || comma != ',' || v < 0 || v >= g.num_vertices()) {
      throw ValidationError("bad csv row: " + line);
    }
    f.values[v] = value;
    seen[v] = 1;
  }
  for (std::int32_t v = 0; v < g.num_vertices(); ++v) {
    if (!seen[v]) throw ValidationError("missing value for vertex " + std::to_string(v));
  }
  return f;
}

void write_edge_chain_csv(std::ostream& os, const EdgeChain& s, const Graph& g) {
  check_shape(s, g);
  os << "u,v,value\n";
  for (std::int32_t u = 0; u < g.num_vertices(); ++u) {
    for (std::size_t i = 0; i < g.adj[u].size(); ++i) {
      if (u < g.adj[u][i]) {
        os << u << ',' << g.adj[u][i] << ',';
        write_double(os, s.values[u][i]);
        os << '\n';
      }
    }
  }
}

EdgeChain read_edge_chain_csv(std::istream& is, const Graph& g) {
  EdgeChain s = EdgeChain::zeros(g);
  std::string line;
  if (!std::getline(is, line) || line != "u,v,value") {
    throw ValidationError("expected 'u,v,value' header");
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::int32_t u, v;
    char c1, c2;
    double value;
    ls >> u >> c1 >> v >> c2 >> value;
    if (ls.fail() || c1 != ',' || c2 != ',') throw ValidationError("bad csv row: " + line);
    s.set(g, u, v, value);
  }
  return s;
}

BoundaryValues read_boundary_csv(std::istream& is, const Graph& g) {
  std::string line;
  if (!std::getline(is, line) || line != "vertex,value") {
    throw ValidationError("expected 'vertex,value' header");
  }
  BoundaryValues out;
  std::vector<char> seen(g.num_vertices(), 0);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::int32_t v;
    char comma;
    double value;
    ls >> v >> comma >> value;
    if (ls.fail() || comma != ',' || v < 0 || v >= g.num_vertices()) {
      throw ValidationError("bad csv row: " + line);
    }
    if (seen[v]) throw ValidationError("boundary vertex listed twice: " + std::to_string(v));
    seen[v] = 1;
    out.emplace_back(v, value);
  }
  return out;
}

std::string energy_report_json(const EnergyReport& report) {
  nlohmann::ordered_json j;
  j["p"] = report.p;
  if (std::isnan(report.max_residual)) {
    j["energy"] = report.energy;
    j["max_residual"] = nullptr;
  } else {
    j["energy"] = report.energy;
    j["max_residual"] = report.max_residual;
  }
  j["iterations"] = report.iterations;
  return j.dump();
}

}  // namespace lpcoh
