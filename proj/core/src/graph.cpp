// Copyright 2026 the lpcoh authors
// SPDX-License-Identifier: Apache-2.0

#include "lpcoh/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "lpcoh/errors.hpp"

namespace lpcoh {

bool Graph::has_edge(std::int32_t u, std::int32_t v) const {
  const auto& nu = adj[u];
  return std::find(nu.begin(), nu.end(), v) != nu.end();
}

void Graph::add_edge(std::int32_t u, std::int32_t v) {
  if (u == v) throw ValidationError("self-loop rejected");
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) {
    throw ValidationError("edge endpoint out of range");
  }
  if (has_edge(u, v)) throw ValidationError("duplicate edge rejected");
  adj[u].push_back(v);
  adj[v].push_back(u);
}

void Graph::validate() const {
  const auto n = num_vertices();
  if (static_cast<std::int32_t>(word_length.size()) != n) {
    throw ValidationError("word_length size mismatch");
  }
  if (base < 0 || base >= n) throw ValidationError("base out of range");
  for (std::int32_t u = 0; u < n; ++u) {
    for (std::int32_t v : adj[u]) {
      if (v == u) throw ValidationError("self-loop");
      if (!has_edge(v, u)) throw ValidationError("asymmetric adjacency");
      if (std::abs(word_length[u] - word_length[v]) > 1) {
        throw ValidationError("word_length not 1-Lipschitz along an edge");
      }
    }
  }
  if (n > 0 && word_length[base] != 0) throw ValidationError("word_length(base) != 0");
}

std::int32_t CayleyBall::vertex(const Elem& e) const {
  auto it = index.find(e);
  if (it == index.end()) throw ValidationError("element not in ball");
  return it->second;
}

CayleyBall build_cayley_ball(const Group& group, int radius, std::int64_t vertex_budget) {
  if (radius < 0) throw ValidationError("radius must be >= 0");
  CayleyBall ball{Graph{}, group, {}, {}, {}, {}};

  auto push = [&](const Elem& e, std::int32_t parent, std::int32_t gen,
                  std::int32_t wl) {
    if (static_cast<std::int64_t>(ball.labels.size()) >= vertex_budget) {
      throw BudgetError("Cayley ball exceeds vertex budget (" +
                        std::to_string(vertex_budget) + ")");
    }
    auto idx = static_cast<std::int32_t>(ball.labels.size());
    ball.labels.push_back(e);
    ball.index.emplace(e, idx);
    ball.parent.push_back(parent);
    ball.parent_gen.push_back(gen);
    ball.graph.word_length.push_back(wl);
    return idx;
  };

  push(group.identity(), -1, -1, 0);
  std::size_t frontier_begin = 0;
  for (int r = 1; r <= radius; ++r) {
    const std::size_t frontier_end = ball.labels.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      const Elem g = ball.labels[i];
      for (std::size_t si = 0; si < group.generators().size(); ++si) {
        Elem h = group.multiply(g, group.generators()[si]);
        if (!ball.contains(h)) {
          push(h, static_cast<std::int32_t>(i), static_cast<std::int32_t>(si), r);
        }
      }
    }
    frontier_begin = frontier_end;
  }

  const auto n = static_cast<std::int32_t>(ball.labels.size());
  ball.graph.adj.assign(n, {});
  ball.graph.base = 0;
  ball.graph.interior_radius = radius;
  for (std::int32_t u = 0; u < n; ++u) {
    for (const Elem& s : group.generators()) {
      auto it = ball.index.find(group.multiply(ball.labels[u], s));
      if (it != ball.index.end() && it->second > u) {
        if (!ball.graph.has_edge(u, it->second)) ball.graph.add_edge(u, it->second);
      }
    }
  }
  return ball;
}

std::vector<std::int32_t> bfs_distances(const Graph& g, std::int32_t src) {
  std::vector<std::int32_t> dist(g.num_vertices(), -1);
  std::deque<std::int32_t> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    auto u = queue.front();
    queue.pop_front();
    for (auto v : g.adj[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::int32_t bfs_distance(const Graph& g, std::int32_t u, std::int32_t v) {
  return bfs_distances(g, u)[v];
}

double gromov_product(const Graph& g, std::int32_t x, std::int32_t y) {
  if (!g.is_interior(x) || !g.is_interior(y)) {
    throw ValidationError("gromov_product requires interior vertices");
  }
  const auto d = bfs_distance(g, x, y);
  if (d < 0) throw ValidationError("vertices not connected");
  return 0.5 * (g.word_length[x] + g.word_length[y] - d);
}

double four_point_defect(std::int32_t dxy, std::int32_t dzw, std::int32_t dxz,
                         std::int32_t dyw, std::int32_t dxw, std::int32_t dyz) {
  std::int32_t sums[3] = {dxy + dzw, dxz + dyw, dxw + dyz};
  std::sort(sums, sums + 3);
  return 0.5 * (sums[2] - sums[1]);
}

double estimate_hyperbolicity(const Graph& g, std::int64_t samples, std::uint64_t seed) {
  const auto n = g.num_vertices();
  if (n == 0) throw ValidationError("empty graph");
  if (samples < 1) throw ValidationError("samples must be >= 1");
  if (n == 1) return 0.0;

  std::mt19937_64 rng(seed);
  std::unordered_map<std::int32_t, std::vector<std::int32_t>> cache;
  auto dist_row = [&](std::int32_t v) -> const std::vector<std::int32_t>& {
    auto it = cache.find(v);
    if (it == cache.end()) it = cache.emplace(v, bfs_distances(g, v)).first;
    return it->second;
  };

  double best = 0.0;
  for (std::int64_t i = 0; i < samples; ++i) {
    std::int32_t q[4];
    for (auto& v : q) v = static_cast<std::int32_t>(rng() % n);
    const auto& dx = dist_row(q[0]);
    const auto& dy = dist_row(q[1]);
    const auto& dz = dist_row(q[2]);
    if (dx[q[1]] < 0 || dx[q[2]] < 0 || dx[q[3]] < 0 || dy[q[2]] < 0 ||
        dy[q[3]] < 0 || dz[q[3]] < 0) {
      continue;  // disconnected quadruple
    }
    best = std::max(best, four_point_defect(dx[q[1]], dz[q[3]], dx[q[2]],
                                            dy[q[3]], dx[q[3]], dy[q[2]]));
  }
  return best;
}

void write_graph(std::ostream& os, const Graph& g) {
  os << "graph " << g.num_vertices() << ' ' << g.base << '\n';
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
  for (std::int32_t u = 0; u < g.num_vertices(); ++u) {
    for (auto v : g.adj[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  std::sort(edges.begin(), edges.end());
  for (auto [u, v] : edges) os << u << ' ' << v << '\n';
  if (g.interior_radius != Graph::kComplete) {
    for (std::int32_t v = 0; v < g.num_vertices(); ++v) {
      os << "wl " << v << ' ' << g.word_length[v] << '\n';
    }
  }
}

Graph read_graph(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw ValidationError("empty graph file");
  std::istringstream head(line);
  std::string magic;
  std::int32_t n = 0, base = 0;
  head >> magic >> n >> base;
  if (magic != "graph" || head.fail() || n < 0 || base < 0 || (n > 0 && base >= n)) {
    throw ValidationError("bad graph header: " + line);
  }
  Graph g;
  g.adj.assign(n, {});
  g.base = base;
  bool saw_wl = false;
  std::vector<std::int32_t> wl(n, -1);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (line.rfind("wl ", 0) == 0) {
      std::string tag;
      std::int32_t v = 0, value = 0;
      ls >> tag >> v >> value;
      if (ls.fail() || v < 0 || v >= n || value < 0) {
        throw ValidationError("bad wl line: " + line);
      }
      wl[v] = value;
      saw_wl = true;
    } else {
      std::int32_t u = 0, v = 0;
      ls >> u >> v;
      if (ls.fail()) throw ValidationError("bad edge line: " + line);
      g.add_edge(u, v);
    }
  }
  if (saw_wl) {
    for (std::int32_t v = 0; v < n; ++v) {
      if (wl[v] < 0) throw ValidationError("missing wl entry for vertex " + std::to_string(v));
    }
    g.word_length = wl;
    // A file with explicit word lengths is a truncation: the outermost sphere
    // is treated as boundary.
    g.interior_radius = 0;
    for (auto w : wl) g.interior_radius = std::max(g.interior_radius, w);
  } else {
    g.word_length = bfs_distances(g, g.base);
    for (auto& w : g.word_length) {
      if (w < 0) throw ValidationError("graph not connected from base");
    }
    g.interior_radius = Graph::kComplete;
  }
  g.validate();
  return g;
}

}  // namespace lpcoh
