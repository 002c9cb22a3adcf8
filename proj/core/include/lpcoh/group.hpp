// Copyright 2026 the lpcoh authors
// SPDX-License-Identifier: Apache-2.0

#ifndef LPCOH_GROUP_HPP_
#define LPCOH_GROUP_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace lpcoh {

/// A group element in normal form, encoded as a small integer vector.
///
/// Encodings per group kind:
///  - ZD(d): the lattice vector itself (d entries).
///  - Lamplighter (Z/2 wr Z): [cursor, lit positions...] with lit positions
///    strictly increasing. The empty lamp configuration is [cursor].
///  - FreeGroup(k): the reduced word, letters in {+-1, ..., +-k}; the
///    identity is the empty vector.
///
/// Normal forms are unique, so Elem equality is group-element equality.
using Elem = std::vector<std::int64_t>;

struct ElemHash {
  std::size_t operator()(const Elem& e) const noexcept;
};

enum class GroupKind { ZD, Lamplighter, FreeGroup };

/// A supported group together with its standard symmetric generating set.
///
/// ZD(d) uses the 2d unit vectors. FreeGroup(k) uses the 2k letters.
/// The lamplighter uses {t, t^-1, a} where t moves the cursor and a toggles
/// the lamp under the cursor. Multiplication for the lamplighter is
///   (f1, c1) * (f2, c2) = (shift_{c2}(f1) xor f2, c1 + c2),
/// chosen so that left multiplication by t moves only the cursor and left
/// multiplication by a toggles the lamp at the cursor. (This is the opposite
/// of the textbook convention; the two groups are anti-isomorphic, so word
/// lengths and Cayley balls agree, and the box-shaped Folner sets
/// {supp f <= [0,m], cursor in [0,m]} are left-Folner in this convention.)
class Group {
 public:
  static Group zd(int d);
  static Group lamplighter();
  static Group free_group(int k);

  /// Parses names like "Z", "Z3", "lamplighter", "F2".
  static Group from_name(const std::string& name);

  GroupKind kind() const { return kind_; }
  /// d for ZD, k for FreeGroup, unused (1) for the lamplighter.
  int rank() const { return rank_; }
  std::string name() const;

  Elem identity() const;
  Elem multiply(const Elem& a, const Elem& b) const;
  Elem inverse(const Elem& a) const;

  /// The symmetric generating set S, in a fixed deterministic order.
  const std::vector<Elem>& generators() const { return generators_; }

  /// Exact word length where a closed form exists (ZD: l1 norm; FreeGroup:
  /// word length). Returns -1 for the lamplighter (use a Cayley ball).
  std::int64_t word_length_closed_form(const Elem& a) const;

  std::string format(const Elem& a) const;
  Elem parse(const std::string& s) const;

 private:
  Group(GroupKind kind, int rank);

  GroupKind kind_;
  int rank_;
  std::vector<Elem> generators_;
};

}  // namespace lpcoh

#endif  // LPCOH_GROUP_HPP_
