// Copyright 2026 the lpcoh authors
// SPDX-License-Identifier: Apache-2.0

#include "lpcoh/cocycle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <unordered_set>

#include "lpcoh/errors.hpp"

namespace lpcoh {

namespace {

double norm_pow(const std::map<Elem, double>& values, double p) {
  double sum = 0.0;
  for (const auto& [k, v] : values) sum += std::pow(std::abs(v), p);
  return sum;
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::int64_t l1_norm(const Elem& x) {
  std::int64_t n = 0;
  for (auto c : x) n += std::abs(c);
  return n;
}

/// Number of points of Z^d with l1 norm exactly r (r >= 1):
/// sum_{k=1}^{min(d,r)} 2^k C(d,k) C(r-1,k-1).
double l1_shell_count(int d, std::int64_t r) {
  if (r == 0) return 1.0;
  double total = 0.0;
  double choose_dk = 1.0;  // C(d,k)
  double pow2 = 1.0;
  for (int k = 1; k <= d && k <= r; ++k) {
    choose_dk *= static_cast<double>(d - k + 1) / k;
    pow2 *= 2.0;
    double choose_r = 1.0;  // C(r-1, k-1)
    for (int j = 1; j <= k - 1; ++j) {
      choose_r *= static_cast<double>(r - k + j) / j;
    }
    total += pow2 * choose_dk * choose_r;
  }
  return total;
}

/// Visits every lattice point of the closed l1 ball of radius T in Z^d.
template <typename Fn>
void for_each_l1_ball(int d, std::int64_t T, Fn&& fn) {
  Elem point(d, 0);
  auto rec = [&](auto&& self, int coord, std::int64_t remaining) -> void {
    if (coord == d - 1) {
      for (std::int64_t v = -remaining; v <= remaining; ++v) {
        point[coord] = v;
        fn(point);
      }
      return;
    }
    for (std::int64_t v = -remaining; v <= remaining; ++v) {
      point[coord] = v;
      self(self, coord + 1, remaining - std::abs(v));
    }
  };
  rec(rec, 0, T);
}

}  // namespace

double RegularRepVector::norm_p_pow() const { return norm_pow(values, p); }

double RegularRepVector::norm_p() const { return std::pow(norm_p_pow(), 1.0 / p); }

void RegularRepVector::add_scaled(const RegularRepVector& other, double scale) {
  for (const auto& [k, v] : other.values) values[k] += scale * v;
}

void RegularRepVector::prune(double eps) {
  for (auto it = values.begin(); it != values.end();) {
    if (std::abs(it->second) <= eps) {
      it = values.erase(it);
    } else {
      ++it;
    }
  }
}

RegularRepVector translate(const Group& group, const Elem& g, const RegularRepVector& v) {
  RegularRepVector out;
  out.p = v.p;
  const Elem ginv = group.inverse(g);
  for (const auto& [x, value] : v.values) {
    out.values.emplace(group.multiply(x, ginv), value);
  }
  return out;
}

double RadialFunction::operator()(const Elem& x) const {
  const auto r = l1_norm(x);
  const double mag = std::pow(static_cast<double>(r), alpha);
  if (!with_sign) return mag;
  return x[0] < 0 ? -mag : mag;
}

CocycleHandle CocycleHandle::finite_coboundary(const Group& group, RegularRepVector f) {
  CocycleHandle h(Kind::FiniteCoboundary, group);
  h.finite_f_ = std::move(f);
  return h;
}

CocycleHandle CocycleHandle::radial_coboundary(const Group& group, RadialFunction f,
                                               double p, std::int64_t truncation) {
  if (group.kind() != GroupKind::ZD) {
    throw ValidationError("radial coboundaries require a ZD group");
  }
  if (f.with_sign && group.rank() != 1) {
    throw ValidationError("signed radial functions are only defined on Z");
  }
  if (!(f.alpha > 0.0 && f.alpha <= 1.0)) {
    throw ValidationError("radial exponent must lie in (0, 1]");
  }
  if (truncation < 1) throw ValidationError("truncation radius must be >= 1");
  if (!(f.beta() * p > static_cast<double>(group.rank()))) {
    throw ValidationError("l^p tail not summable: need (1 - alpha) * p > d");
  }
  CocycleHandle h(Kind::RadialCoboundary, group);
  h.radial_f_ = f;
  h.truncation_ = truncation;
  return h;
}

CocycleHandle CocycleHandle::generator_driven(const CayleyBall& ball,
                                              std::vector<RegularRepVector> images) {
  if (images.size() != ball.group.generators().size()) {
    throw ValidationError("need one cocycle image per generator");
  }
  CocycleHandle h(Kind::GeneratorDriven, ball.group);
  h.ball_ = &ball;
  h.generator_images_ = std::move(images);
  return h;
}

RegularRepVector CocycleHandle::evaluate(const Elem& g) const {
  switch (kind_) {
    case Kind::FiniteCoboundary: {
      RegularRepVector b = finite_f_;
      b.add_scaled(translate(group_, g, finite_f_), -1.0);
      b.prune();
      return b;
    }
    case Kind::RadialCoboundary: {
      RegularRepVector b;
      const int d = group_.rank();
      for_each_l1_ball(d, truncation_, [&](const Elem& x) {
        Elem xg(d);
        for (int i = 0; i < d; ++i) xg[i] = x[i] + g[i];
        const double diff = radial_f_(x) - radial_f_(xg);
        if (diff != 0.0) b.values.emplace(x, diff);
      });
      return b;
    }
    case Kind::GeneratorDriven: {
      // Walk the BFS-tree word of g and expand b(g s) = b(g) + pi(g) b(s).
      std::vector<std::int32_t> word;
      for (std::int32_t v = ball_->vertex(g); v != 0; v = ball_->parent[v]) {
        word.push_back(ball_->parent_gen[v]);
      }
      std::reverse(word.begin(), word.end());
      RegularRepVector b;
      Elem prefix = group_.identity();
      for (auto gen : word) {
        b.add_scaled(translate(group_, prefix, generator_images_[gen]), 1.0);
        prefix = group_.multiply(prefix, group_.generators()[gen]);
      }
      return b;
    }
  }
  throw ValidationError("unreachable cocycle kind");
}

double CocycleHandle::tail_bound_p_pow(const Elem& g, double p) const {
  if (kind_ != Kind::RadialCoboundary) return 0.0;
  const int d = group_.rank();
  const auto m = l1_norm(g);
  if (m == 0) return 0.0;
  if (truncation_ <= 2 * m) {
    throw ValidationError("truncation radius too small to certify the tail");
  }
  // For |x| = r > T: moving from x to x+g takes m unit steps, every one of
  // which stays at l1 norm >= r - m, so
  //   |f(x) - f(x+g)| <= m * L * (r - m)^{-beta}.
  // Summing shell counts N_d(r) <= N_d(R)/ (R-m)^{d-1} * (r-m)^{d-1} * C
  // against the decay and comparing with the integral gives a finite bound
  // when gamma = beta*p - (d-1) > 1 (guaranteed by the constructor check).
  const double L = radial_f_.lipschitz();
  const double beta = radial_f_.beta();
  const double gamma = beta * p - static_cast<double>(d - 1);
  const double R = static_cast<double>(truncation_ + 1);
  const double md = static_cast<double>(m);
  // r^{d-1} <= (R/(R-m))^{d-1} (r-m)^{d-1} for r >= R, and
  // N_d(r) <= 2^d * r^{d-1} for d <= 3 (exact counts: 2, 4r, 4r^2+2).
  const double shell_coeff = std::pow(2.0, d) * std::pow(R / (R - md), d - 1);
  const double S = R - md;  // first summand index after substitution s = r - m
  const double tail_sum = std::pow(S, -gamma) + std::pow(S, 1.0 - gamma) / (gamma - 1.0);
  return shell_coeff * std::pow(md * L, p) * tail_sum;
}

double CocycleHandle::norm_p_pow(const Elem& g, double p) const {
  if (kind_ == Kind::RadialCoboundary && group_.rank() == 1) {
    const std::int64_t k = g[0];
    double sum = 0.0;
    for (std::int64_t x = -truncation_; x <= truncation_; ++x) {
      const double diff = radial_f_(Elem{x}) - radial_f_(Elem{x + k});
      sum += std::pow(std::abs(diff), p);
    }
    return sum;
  }
  return norm_pow(evaluate(g).values, p);
}

SublinearityProfile sublinearity_profile(const CocycleHandle& b, int N, double p,
                                         int stride, std::int64_t vertex_budget) {
  if (N < 1 || stride < 1) throw ValidationError("profile needs N >= 1, stride >= 1");
  const CayleyBall ball = build_cayley_ball(b.group(), N, vertex_budget);

  SublinearityProfile profile;
  for (int n = stride; n <= N; n += stride) {
    SublinearityProfile::Row row;
    row.n = n;
    double max_pow = 0.0;
    double max_tail_pow = 0.0;
    for (std::size_t v = 0; v < ball.labels.size(); ++v) {
      if (ball.graph.word_length[v] != n) continue;
      const double tail_pow = b.tail_bound_p_pow(ball.labels[v], p);
      const double total = b.norm_p_pow(ball.labels[v], p) + tail_pow;
      max_pow = std::max(max_pow, total);
      max_tail_pow = std::max(max_tail_pow, tail_pow);
    }
    row.max_norm = std::pow(max_pow, 1.0 / p);
    row.ratio = row.max_norm / n;
    row.tail_bound = std::pow(max_tail_pow, 1.0 / p);
    profile.rows.push_back(row);
  }
  return profile;
}

std::int64_t mixing_overlap(const Group& group, const std::vector<Elem>& A, const Elem& g) {
  std::unordered_set<Elem, ElemHash> set(A.begin(), A.end());
  if (set.size() != A.size()) throw ValidationError("set A has repeated elements");
  std::int64_t overlap = 0;
  for (const Elem& a : A) {
    if (set.count(group.multiply(g, a)) != 0) ++overlap;
  }
  return overlap;
}

std::pair<double, double> separation_additivity(const Group& group,
                                                const std::vector<RegularRepVector>& vectors,
                                                const std::vector<Elem>& shifts, double p) {
  if (vectors.size() != shifts.size()) {
    throw ValidationError("need one shift per vector");
  }
  // Group all contributions by target key so that, when the translated
  // supports are disjoint, both norms are accumulated term by term in the
  // identical order and compare bit-for-bit.
  std::map<Elem, std::vector<double>> contributions;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const Elem ginv = group.inverse(shifts[i]);
    for (const auto& [x, value] : vectors[i].values) {
      contributions[group.multiply(x, ginv)].push_back(value);
    }
  }
  double lhs = 0.0, rhs = 0.0;
  for (const auto& [key, terms] : contributions) {
    double total = 0.0;
    for (double t : terms) {
      total += t;
      rhs += std::pow(std::abs(t), p);
    }
    lhs += std::pow(std::abs(total), p);
  }
  return {lhs, rhs};
}

void write_profile_csv(std::ostream& os, const SublinearityProfile& profile) {
  os << "n,max_norm,ratio,tail_bound\n";
  for (const auto& row : profile.rows) {
    os << row.n << ',' << format_double(row.max_norm) << ','
       << format_double(row.ratio) << ',' << format_double(row.tail_bound) << '\n';
  }
}

}  // namespace lpcoh
