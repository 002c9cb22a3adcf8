// Copyright 2026 the lpcoh authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LPCOH_FOLNER_HPP_
#define LPCOH_FOLNER_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lpcoh/cocycle.hpp"
#include "lpcoh/dirichlet.hpp"
#include "lpcoh/graph.hpp"
#include "lpcoh/group.hpp"

namespace lpcoh {

/// A sequence of candidate Folner sets F_1, ..., F_N (sets[n-1] is F_n),
/// each listed in a fixed deterministic order.
struct FolnerSequence {
  Group group;
  std::vector<std::vector<Elem>> sets;

  int size() const { return static_cast<int>(sets.size()); }
  const std::vector<Elem>& at(int n) const;  // 1-based, validated
};

/// Controlled-Folner certificate for a constant C: for every n and every
/// generator s, |s F_n symdiff F_n| / |F_n| <= C / n, and F_n is contained in
/// the word-metric ball of radius n. Ratios are exact set arithmetic; the
/// pass decision uses exact integer comparisons when C is an integer.
struct ControlCertificate {
  struct PerN {
    int n = 0;
    double max_ratio = 0.0;  // max over generators of |sF_n symdiff F_n|/|F_n|
    bool containment = false;
    std::int64_t set_size = 0;
  };
  double C = 0.0;
  bool pass = false;
  std::vector<PerN> per_n;
};

/// Cubes in ZD(d): F_n = [-h, h]^d with h = floor(n/2) for d = 1 and
/// h = floor(n / (2d)) for d >= 2, so that the l1 diameter keeps F_n inside
/// the ball of radius n.
FolnerSequence folner_zd(int d, int N, std::int64_t vertex_budget = kDefaultVertexBudget);

/// Lamplighter boxes: F_n = {(config, cursor) : supp(config) and cursor in
/// [0, m(n)]} with m(n) = floor((n-1)/3), which keeps F_n inside the ball of
/// radius n (verified by the certificate, not assumed).
FolnerSequence folner_lamplighter(int N, std::int64_t vertex_budget = kDefaultVertexBudget);

ControlCertificate verify_controlled(const FolnerSequence& F, double C,
                                     std::int64_t vertex_budget = kDefaultVertexBudget);

/// v_n = (1/|F_n|) sum_{g in F_n} b(g).
RegularRepVector average_cocycle(const CocycleHandle& b, const FolnerSequence& F, int n);

/// Displacement ||sigma(s) v_n - v_n||_p = ||pi(s) v_n + b(s) - v_n||_p for
/// each generator s, in generator order.
std::vector<double> almost_fixed_displacement(const CocycleHandle& b,
                                              const FolnerSequence& F, int n, double p);

/// sup_{|g|_S <= radius} ||b(g)||_p including certified tails — the right-hand
/// factor of the almost-fixed-point bound (C/n) * sup_{|g| <= n+1} ||b(g)||_p.
double sup_cocycle_norm(const CocycleHandle& b, int radius, double p,
                        std::int64_t vertex_budget = kDefaultVertexBudget);

/// The smoothing P_n f(x) = (1/|F_n|) sum_{y in F_n} f(y x) on a Cayley ball.
/// Defined only where every translate y x stays inside the ball.
struct ConvolveResult {
  VertexFunction smoothed;   // values are 0 where not valid
  std::vector<char> valid;   // 1 where every translate was available
  double energy = 0.0;       // p-energy of gradient(smoothed) over valid pairs
};
ConvolveResult convolve_approximation(const VertexFunction& f, const FolnerSequence& F,
                                      int n, const CayleyBall& ball, double p);

// --- external interfaces ---

/// One line per n listing the member labels in normal form, space separated.
void write_folner_sequence(std::ostream& os, const FolnerSequence& F);
FolnerSequence read_folner_sequence(std::istream& is, const Group& group);

/// {"C":..., "pass":..., "per_n":[{"n":..,"max_ratio":..,"containment":..}]}
std::string certificate_json(const ControlCertificate& cert);

}  // namespace lpcoh

#endif  // LPCOH_FOLNER_HPP_
