// Copyright 2026 the lpcoh authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LPCOH_GRAPH_HPP_
#define LPCOH_GRAPH_HPP_

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <unordered_map>
#include <vector>

#include "lpcoh/group.hpp"

namespace lpcoh {

inline constexpr std::int64_t kDefaultVertexBudget = 5'000'000;

/// Finite bounded-degree graph with a base vertex and word-length labels.
///
/// A graph stands for a finite truncation of a (possibly infinite) space.
/// `interior_radius` is an R such that every vertex with word_length < R has
/// its full neighbor set present; operations whose answer could depend on
/// missing vertices must restrict themselves to such interior vertices.
/// A graph with no missing vertices uses the kComplete sentinel.
struct Graph {
  static constexpr std::int32_t kComplete = std::numeric_limits<std::int32_t>::max();

  std::vector<std::vector<std::int32_t>> adj;
  std::int32_t base = 0;
  std::vector<std::int32_t> word_length;
  std::int32_t interior_radius = kComplete;

  std::int32_t num_vertices() const { return static_cast<std::int32_t>(adj.size()); }
  std::int32_t degree(std::int32_t v) const { return static_cast<std::int32_t>(adj[v].size()); }
  bool is_interior(std::int32_t v) const { return word_length[v] < interior_radius; }
  bool has_edge(std::int32_t u, std::int32_t v) const;

  /// Adds the undirected edge {u,v}. Rejects loops and duplicates.
  void add_edge(std::int32_t u, std::int32_t v);

  /// Checks adjacency symmetry/irreflexivity and the 1-Lipschitz property of
  /// word_length along edges; throws ValidationError on failure.
  void validate() const;
};

/// A Cayley ball: the graph plus the vertex <-> group-element bijection and
/// the BFS tree that built it (parent_gen indexes into group.generators()).
struct CayleyBall {
  Graph graph;
  Group group;
  std::vector<Elem> labels;
  std::unordered_map<Elem, std::int32_t, ElemHash> index;
  std::vector<std::int32_t> parent;      // -1 at the base
  std::vector<std::int32_t> parent_gen;  // -1 at the base

  bool contains(const Elem& e) const { return index.count(e) != 0; }
  std::int32_t vertex(const Elem& e) const;
};

/// Builds the ball S^radius in the word metric, with all edges between its
/// vertices. interior_radius = radius.
CayleyBall build_cayley_ball(const Group& group, int radius,
                             std::int64_t vertex_budget = kDefaultVertexBudget);

/// BFS distances from src; unreachable vertices get -1.
std::vector<std::int32_t> bfs_distances(const Graph& g, std::int32_t src);
std::int32_t bfs_distance(const Graph& g, std::int32_t u, std::int32_t v);

/// Gromov product (x|y) = (|x| + |y| - d(x,y)) / 2 relative to the base.
/// Both vertices must be interior (the in-ball distance of non-interior
/// vertices could overestimate the true distance).
double gromov_product(const Graph& g, std::int32_t x, std::int32_t y);

/// Four-point hyperbolicity defect of a quadruple: half the gap between the
/// two largest of the three pairwise distance sums.
double four_point_defect(std::int32_t dxy, std::int32_t dzw, std::int32_t dxz,
                         std::int32_t dyw, std::int32_t dxw, std::int32_t dyz);

/// Max four-point defect over `samples` random quadruples. Deterministic for
/// a fixed seed.
double estimate_hyperbolicity(const Graph& g, std::int64_t samples, std::uint64_t seed);

/// Text format: "graph <num_vertices> <base>", one "u v" line per edge
/// (u < v, sorted), then "wl <vertex> <value>" lines. Reader and writer
/// round-trip bit-exactly on canonical files.
void write_graph(std::ostream& os, const Graph& g);
Graph read_graph(std::istream& is);

}  // namespace lpcoh

#endif  // LPCOH_GRAPH_HPP_
