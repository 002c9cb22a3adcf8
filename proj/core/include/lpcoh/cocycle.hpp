// Copyright 2026 the lpcoh authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LPCOH_COCYCLE_HPP_
#define LPCOH_COCYCLE_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lpcoh/graph.hpp"
#include "lpcoh/group.hpp"

namespace lpcoh {

/// Finitely supported vector in l^p(G), keyed by normal forms. The ordered
/// map gives a canonical iteration order, so norms are reproducible.
struct RegularRepVector {
  std::map<Elem, double> values;
  double p = 2.0;

  double norm_p_pow() const;
  double norm_p() const;
  void add_scaled(const RegularRepVector& other, double scale);
  void prune(double eps = 0.0);
};

/// Right-regular representation: (pi(g) v)(x) = v(xg). Isometric on l^p.
RegularRepVector translate(const Group& group, const Elem& g, const RegularRepVector& v);

/// Radial function f(x) = phi(|x|) on ZD(d): phi(r) = r^alpha, optionally
/// signed (d = 1 only): f(x) = sign(x) |x|^alpha. Adjacent differences are
/// certified to satisfy |f(x)-f(y)| <= lipschitz * max(1, min(|x|,|y|))^-beta
/// with lipschitz = 1, beta = 1 - alpha (0 < alpha <= 1).
struct RadialFunction {
  double alpha = 0.5;
  bool with_sign = false;

  double lipschitz() const { return 1.0; }
  double beta() const { return 1.0 - alpha; }
  double operator()(const Elem& x) const;  // via the l1 word length
};

/// A 1-cocycle b : G -> l^p(G) for the right-regular representation.
///
/// Kinds:
///  - finite coboundary: b(g) = f - pi(g)f for finitely supported f (exact);
///  - radial coboundary: same with f = phi(|x|); evaluations are truncated to
///    the l1 ball of radius `truncation` and carry a certified l^p tail bound;
///  - generator driven: b given on generators and expanded along BFS words
///    with b(g s) = b(g) + pi(g) b(s).
class CocycleHandle {
 public:
  static CocycleHandle finite_coboundary(const Group& group, RegularRepVector f);
  static CocycleHandle radial_coboundary(const Group& group, RadialFunction f,
                                         double p, std::int64_t truncation);
  /// `images[i]` is b(group.generators()[i]); `ball` supplies BFS words.
  static CocycleHandle generator_driven(const CayleyBall& ball,
                                        std::vector<RegularRepVector> images);

  const Group& group() const { return group_; }

  /// The explicitly supported part of b(g) (everything, except for radial
  /// coboundaries where the support is truncated).
  RegularRepVector evaluate(const Elem& g) const;

  /// Certified upper bound on the l^p mass of b(g) outside the truncated
  /// support; 0 for exact kinds.
  double tail_bound_p_pow(const Elem& g, double p) const;

  /// ||b(g)||_p^p of the explicit part, without materializing the support
  /// (fast path for radial coboundaries on Z).
  double norm_p_pow(const Elem& g, double p) const;

 private:
  enum class Kind { FiniteCoboundary, RadialCoboundary, GeneratorDriven };
  CocycleHandle(Kind kind, Group group)
      : kind_(kind), group_(std::move(group)) {}

  Kind kind_;
  Group group_;
  RegularRepVector finite_f_;
  RadialFunction radial_f_;
  std::int64_t truncation_ = 0;
  const CayleyBall* ball_ = nullptr;
  std::vector<RegularRepVector> generator_images_;
};

struct SublinearityProfile {
  struct Row {
    int n = 0;
    double max_norm = 0.0;    // max over |g| = n of ||b(g)||_p, incl. tail
    double ratio = 0.0;       // max_norm / n
    double tail_bound = 0.0;  // the certified tail contribution, norm units
  };
  std::vector<Row> rows;
};

/// M(n) = max_{|g|=n} ||b(g)||_p for n = stride, 2*stride, ..., <= N.
/// Spheres are enumerated from a Cayley ball of radius N.
SublinearityProfile sublinearity_profile(const CocycleHandle& b, int N, double p,
                                         int stride = 1,
                                         std::int64_t vertex_budget = kDefaultVertexBudget);

/// |gA cap A| under left translation.
std::int64_t mixing_overlap(const Group& group, const std::vector<Elem>& A, const Elem& g);

/// Returns (||sum_i pi(g_i) v_i||_p^p, sum_i ||v_i||_p^p). Both sides are
/// accumulated over the same multiset of terms, so they agree exactly (not
/// just up to rounding) when the translated supports are pairwise disjoint.
std::pair<double, double> separation_additivity(const Group& group,
                                                const std::vector<RegularRepVector>& vectors,
                                                const std::vector<Elem>& shifts, double p);

/// CSV rows "n,max_norm,ratio,tail_bound".
void write_profile_csv(std::ostream& os, const SublinearityProfile& profile);

}  // namespace lpcoh

#endif  // LPCOH_COCYCLE_HPP_
