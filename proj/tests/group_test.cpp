// Copyright 2026 the lpcoh authors
// SPDX-License-Identifier: Apache-2.0

#include "lpcoh/group.hpp"

#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include <doctest.h>

#include "lpcoh/errors.hpp"

using lpcoh::Elem;
using lpcoh::Group;
using lpcoh::GroupKind;
using lpcoh::ValidationError;

namespace {

// Independent lamplighter oracle with an explicit (lamp set, cursor) state
// and the same multiplication convention as the library:
//   (f1, c1) * (f2, c2) = (shift_{c2}(f1) xor f2, c1 + c2).
struct LampState {
  std::set<std::int64_t> lamps;
  std::int64_t cursor = 0;
  auto operator<=>(const LampState&) const = default;
};

LampState lamp_mult(const LampState& a, const LampState& b) {
  LampState out;
  out.cursor = a.cursor + b.cursor;
  for (auto x : a.lamps) out.lamps.insert(x + b.cursor);
  for (auto x : b.lamps) {
    auto [it, inserted] = out.lamps.insert(x);
    if (!inserted) out.lamps.erase(it);
  }
  return out;
}

LampState decode(const Elem& e) {
  LampState s;
  s.cursor = e[0];
  s.lamps.insert(e.begin() + 1, e.end());
  return s;
}

Elem encode(const LampState& s) {
  Elem e{s.cursor};
  e.insert(e.end(), s.lamps.begin(), s.lamps.end());
  return e;
}

// Independent reduced-word oracle for free groups.
Elem free_mult_oracle(const Elem& a, const Elem& b) {
  Elem out = a;
  for (auto letter : b) {
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

Elem random_elem(const Group& g, std::mt19937_64& rng, int length) {
  Elem e = g.identity();
  for (int i = 0; i < length; ++i) {
    e = g.multiply(e, g.generators()[rng() % g.generators().size()]);
  }
  return e;
}

}  // namespace

TEST_CASE("ZD basics") {
  const Group z3 = Group::zd(3);
  CHECK(z3.kind() == GroupKind::ZD);
  CHECK(z3.rank() == 3);
  CHECK(z3.generators().size() == 6);
  CHECK(z3.identity() == Elem{0, 0, 0});
  CHECK(z3.multiply({1, -2, 3}, {4, 5, -6}) == Elem{5, 3, -3});
  CHECK(z3.inverse({1, -2, 3}) == Elem{-1, 2, -3});
  CHECK(z3.word_length_closed_form({1, -2, 3}) == 6);

  // The generating set is symmetric: closed under inverse.
  for (const Elem& s : z3.generators()) {
    bool found = false;
    for (const Elem& t : z3.generators()) {
      if (t == z3.inverse(s)) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("ZD format/parse round-trip") {
  const Group z2 = Group::zd(2);
  const Elem e{-7, 12};
  CHECK(z2.parse(z2.format(e)) == e);
  CHECK(z2.format(z2.identity()) == z2.format(Elem{0, 0}));
  CHECK_THROWS_AS(z2.parse("1,2,3"), ValidationError);
  CHECK_THROWS_AS(z2.parse("foo"), ValidationError);
}

TEST_CASE("group name parsing") {
  CHECK(Group::from_name("Z").rank() == 1);
  CHECK(Group::from_name("Z3").rank() == 3);
  CHECK(Group::from_name("lamplighter").kind() == GroupKind::Lamplighter);
  CHECK(Group::from_name("F2").kind() == GroupKind::FreeGroup);
  CHECK(Group::from_name("F2").rank() == 2);
  CHECK_THROWS_AS(Group::from_name("Q5"), ValidationError);
  CHECK_THROWS_AS(Group::from_name(""), ValidationError);
}

TEST_CASE("lamplighter matches the independent state oracle") {
  const Group lamp = Group::lamplighter();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Elem a = random_elem(lamp, rng, static_cast<int>(rng() % 12));
    const Elem b = random_elem(lamp, rng, static_cast<int>(rng() % 12));
    CHECK(lamp.multiply(a, b) == encode(lamp_mult(decode(a), decode(b))));
    // inverse and associativity
    CHECK(lamp.multiply(a, lamp.inverse(a)) == lamp.identity());
    const Elem c = random_elem(lamp, rng, static_cast<int>(rng() % 12));
    CHECK(lamp.multiply(lamp.multiply(a, b), c) == lamp.multiply(a, lamp.multiply(b, c)));
  }
}

TEST_CASE("lamplighter left multiplication moves the cursor / toggles the lamp") {
  const Group lamp = Group::lamplighter();
  const Elem t = lamp.generators()[0][0] == 1 ? lamp.generators()[0] : lamp.generators()[1];
  REQUIRE(t == Elem{1});
  Elem a_gen{0, 0};

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Elem g = random_elem(lamp, rng, static_cast<int>(rng() % 10));
    const LampState s = decode(g);

    // t * g: cursor + 1, same lamps.
    LampState expected = s;
    expected.cursor += 1;
    CHECK(lamp.multiply(t, g) == encode(expected));

    // a * g: toggle the lamp at the cursor.
    LampState toggled = s;
    auto [it, inserted] = toggled.lamps.insert(s.cursor);
    if (!inserted) toggled.lamps.erase(it);
    CHECK(lamp.multiply(a_gen, g) == encode(toggled));
  }
}

TEST_CASE("lamplighter normal form stays sorted and unique") {
  const Group lamp = Group::lamplighter();
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Elem g = random_elem(lamp, rng, static_cast<int>(rng() % 16));
    for (std::size_t i = 2; i < g.size(); ++i) CHECK(g[i - 1] < g[i]);
    CHECK(lamp.parse(lamp.format(g)) == g);
  }
  CHECK(lamp.word_length_closed_form(lamp.identity()) == -1);
}

TEST_CASE("free group matches the reduced-word oracle") {
  const Group f2 = Group::free_group(2);
  CHECK(f2.generators().size() == 4);
  CHECK(f2.identity().empty());
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Elem a = random_elem(f2, rng, static_cast<int>(rng() % 10));
    const Elem b = random_elem(f2, rng, static_cast<int>(rng() % 10));
    CHECK(f2.multiply(a, b) == free_mult_oracle(a, b));
    CHECK(f2.multiply(a, f2.inverse(a)) == f2.identity());
    CHECK(f2.word_length_closed_form(a) == static_cast<std::int64_t>(a.size()));
  }
}

TEST_CASE("free group words stay reduced") {
  const Group f3 = Group::free_group(3);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Elem a = random_elem(f3, rng, static_cast<int>(rng() % 14));
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i] != -a[i - 1]);
    CHECK(f3.parse(f3.format(a)) == a);
  }
}

TEST_CASE("ElemHash is deterministic and usable") {
  lpcoh::ElemHash h;
  CHECK(h(Elem{1, 2, 3}) == h(Elem{1, 2, 3}));
  CHECK(h(Elem{1, 2, 3}) != h(Elem{1, 2, 4}));  // not guaranteed, but holds for FNV-1a
  CHECK(h(Elem{}) == h(Elem{}));
}
