// Copyright 2026 the lpcoh authors
// SPDX-License-Identifier: Apache-2.0

#include "lpcoh/folner.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "lpcoh/errors.hpp"

namespace lpcoh {

namespace {

using ElemSet = std::unordered_set<Elem, ElemHash>;

/// Enumerates the cube [-h, h]^d in lexicographic order.
std::vector<Elem> cube(int d, std::int64_t h) {
  std::vector<Elem> out;
  Elem point(d, -h);
  while (true) {
    out.push_back(point);
    int i = d - 1;
    while (i >= 0 && point[i] == h) point[i--] = -h;
    if (i < 0) break;
    ++point[i];
  }
  return out;
}

}  // namespace

const std::vector<Elem>& FolnerSequence::at(int n) const {
  if (n < 1 || n > size()) throw ValidationError("Folner index out of range");
  return sets[n - 1];
}

FolnerSequence folner_zd(int d, int N, std::int64_t vertex_budget) {
  if (d < 1 || N < 1) throw ValidationError("folner_zd needs d >= 1, N >= 1");
  FolnerSequence F{Group::zd(d), {}};
  for (int n = 1; n <= N; ++n) {
    const std::int64_t h = d == 1 ? n / 2 : n / (2 * d);
    double size = std::pow(2.0 * h + 1.0, d);
    if (size > static_cast<double>(vertex_budget)) {
      throw BudgetError("Folner cube exceeds vertex budget at n = " + std::to_string(n));
    }
    F.sets.push_back(cube(d, h));
  }
  return F;
}

FolnerSequence folner_lamplighter(int N, std::int64_t vertex_budget) {
  if (N < 1) throw ValidationError("folner_lamplighter needs N >= 1");
  FolnerSequence F{Group::lamplighter(), {}};
  for (int n = 1; n <= N; ++n) {
    const std::int64_t m = (n - 1) / 3;
    const double size = static_cast<double>(m + 1) * std::pow(2.0, static_cast<double>(m + 1));
    if (size > static_cast<double>(vertex_budget)) {
      throw BudgetError("Folner box exceeds vertex budget at n = " + std::to_string(n));
    }
    // All (cursor, lamp subset of [0, m]) pairs: cursor ascending, subsets in
    // binary-counter order.
    std::vector<Elem> set;
    for (std::int64_t cursor = 0; cursor <= m; ++cursor) {
      for (std::uint64_t mask = 0; mask < (1ull << (m + 1)); ++mask) {
        Elem e{cursor};
        for (std::int64_t pos = 0; pos <= m; ++pos) {
          if (mask & (1ull << pos)) e.push_back(pos);
        }
        set.push_back(std::move(e));
      }
    }
    F.sets.push_back(std::move(set));
  }
  return F;
}

ControlCertificate verify_controlled(const FolnerSequence& F, double C,
                                     std::int64_t vertex_budget) {
  if (!(C > 0.0)) throw ValidationError("certificate constant must be positive");
  const Group& group = F.group;
  const int N = F.size();

  // Word-length oracle for the containment check: closed form when available,
  // otherwise one BFS ball of radius N.
  const bool closed_form = group.word_length_closed_form(group.identity()) >= 0;
  std::optional<CayleyBall> ball;
  if (!closed_form) ball = build_cayley_ball(group, N, vertex_budget);
  auto word_length = [&](const Elem& g) -> std::int64_t {
    if (closed_form) return group.word_length_closed_form(g);
    auto it = ball->index.find(g);
    return it == ball->index.end() ? static_cast<std::int64_t>(N) + 1
                                   : ball->graph.word_length[it->second];
  };

  const bool integral_C = C == std::floor(C) && C < 1e18;
  const auto C_int = static_cast<std::int64_t>(C);

  ControlCertificate cert;
  cert.C = C;
  cert.pass = true;
  for (int n = 1; n <= N; ++n) {
    const auto& set = F.at(n);
    if (set.empty()) throw ValidationError("empty Folner set at n = " + std::to_string(n));
    const ElemSet members(set.begin(), set.end());
    if (members.size() != set.size()) {
      throw ValidationError("repeated element in Folner set at n = " + std::to_string(n));
    }

    ControlCertificate::PerN row;
    row.n = n;
    row.set_size = static_cast<std::int64_t>(set.size());
    row.containment = true;
    for (const Elem& g : set) {
      if (word_length(g) > n) {
        row.containment = false;
        break;
      }
    }

    for (const Elem& s : group.generators()) {
      // |sF symdiff F| = 2 |sF \ F| since left translation is a bijection.
      std::int64_t escaped = 0;
      for (const Elem& g : set) {
        if (members.count(group.multiply(s, g)) == 0) ++escaped;
      }
      const std::int64_t sym_diff = 2 * escaped;
      row.max_ratio = std::max(
          row.max_ratio, static_cast<double>(sym_diff) / static_cast<double>(row.set_size));
      // Ratio <= C / n, i.e. sym_diff * n <= C * |F|, checked exactly when
      // C is an integer.
      bool ok;
      if (integral_C) {
        ok = static_cast<__int128>(sym_diff) * n <= static_cast<__int128>(C_int) * row.set_size;
      } else {
        ok = static_cast<long double>(sym_diff) * n <=
             static_cast<long double>(C) * static_cast<long double>(row.set_size);
      }
      if (!ok) cert.pass = false;
    }
    if (!row.containment) cert.pass = false;
    cert.per_n.push_back(row);
  }
  return cert;
}

RegularRepVector average_cocycle(const CocycleHandle& b, const FolnerSequence& F, int n) {
  const auto& set = F.at(n);
  if (set.empty()) throw ValidationError("empty Folner set");
  RegularRepVector sum;
  for (const Elem& g : set) sum.add_scaled(b.evaluate(g), 1.0);
  const double scale = 1.0 / static_cast<double>(set.size());
  for (auto& [k, v] : sum.values) v *= scale;
  return sum;
}

std::vector<double> almost_fixed_displacement(const CocycleHandle& b,
                                              const FolnerSequence& F, int n, double p) {
  const RegularRepVector v = average_cocycle(b, F, n);
  std::vector<double> out;
  for (const Elem& s : b.group().generators()) {
    RegularRepVector d = translate(b.group(), s, v);
    d.add_scaled(b.evaluate(s), 1.0);
    d.add_scaled(v, -1.0);
    d.p = p;
    out.push_back(d.norm_p());
  }
  return out;
}

double sup_cocycle_norm(const CocycleHandle& b, int radius, double p,
                        std::int64_t vertex_budget) {
  const CayleyBall ball = build_cayley_ball(b.group(), radius, vertex_budget);
  double max_pow = 0.0;
  for (const Elem& g : ball.labels) {
    max_pow = std::max(max_pow, b.norm_p_pow(g, p) + b.tail_bound_p_pow(g, p));
  }
  return std::pow(max_pow, 1.0 / p);
}

ConvolveResult convolve_approximation(const VertexFunction& f, const FolnerSequence& F,
                                      int n, const CayleyBall& ball, double p) {
  const auto& set = F.at(n);
  const auto num_vertices = ball.graph.num_vertices();
  if (static_cast<std::int32_t>(f.values.size()) != num_vertices) {
    throw ValidationError("vertex function does not match the ball");
  }
  ConvolveResult result;
  result.smoothed = VertexFunction::zeros(ball.graph);
  result.valid.assign(num_vertices, 0);

  std::int64_t valid_count = 0;
  for (std::int32_t x = 0; x < num_vertices; ++x) {
    double sum = 0.0;
    bool ok = true;
    for (const Elem& y : set) {
      auto it = ball.index.find(ball.group.multiply(y, ball.labels[x]));
      if (it == ball.index.end()) {
        ok = false;
        break;
      }
      sum += f.values[it->second];
    }
    if (ok) {
      result.smoothed.values[x] = sum / static_cast<double>(set.size());
      result.valid[x] = 1;
      ++valid_count;
    }
  }
  if (valid_count == 0) {
    throw ValidationError("no vertex survives the translation shrinkage; enlarge the ball");
  }

  double energy = 0.0;
  for (std::int32_t u = 0; u < num_vertices; ++u) {
    if (!result.valid[u]) continue;
    for (auto v : ball.graph.adj[u]) {
      if (!result.valid[v]) continue;
      energy += std::pow(std::abs(result.smoothed.values[u] - result.smoothed.values[v]), p);
    }
  }
  result.energy = energy;
  return result;
}

void write_folner_sequence(std::ostream& os, const FolnerSequence& F) {
  for (const auto& set : F.sets) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (i > 0) os << ' ';
      os << F.group.format(set[i]);
    }
    os << '\n';
  }
}

FolnerSequence read_folner_sequence(std::istream& is, const Group& group) {
  FolnerSequence F{group, {}};
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<Elem> set;
    std::string token;
    while (ls >> token) set.push_back(group.parse(token));
    if (set.empty()) throw ValidationError("empty Folner set line");
    F.sets.push_back(std::move(set));
  }
  if (F.sets.empty()) throw ValidationError("empty Folner sequence file");
  return F;
}

std::string certificate_json(const ControlCertificate& cert) {
  nlohmann::ordered_json j;
  j["C"] = cert.C;
  j["pass"] = cert.pass;
  j["per_n"] = nlohmann::ordered_json::array();
  for (const auto& row : cert.per_n) {
    j["per_n"].push_back({{"n", row.n},
                          {"max_ratio", row.max_ratio},
                          {"containment", row.containment}});
  }
  return j.dump(2);
}

}  // namespace lpcoh
