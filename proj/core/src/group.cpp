// Copyright 2026 the lpcoh authors
// SPDX-License-Identifier: Apache-2.0

#include "lpcoh/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "lpcoh/errors.hpp"

namespace lpcoh {

std::size_t ElemHash::operator()(const Elem& e) const noexcept {
  // FNV-1a over the raw words.
  std::size_t h = 1469598103934665603ull;
  for (std::int64_t v : e) {
    auto u = static_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) {
      h ^= (u >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return h;
}

Group::Group(GroupKind kind, int rank) : kind_(kind), rank_(rank) {
  switch (kind_) {
    case GroupKind::ZD:
      for (int i = 0; i < rank_; ++i) {
        Elem plus(rank_, 0), minus(rank_, 0);
        plus[i] = 1;
        minus[i] = -1;
        generators_.push_back(plus);
        generators_.push_back(minus);
      }
      break;
    case GroupKind::Lamplighter:
      generators_.push_back({1});      // t
      generators_.push_back({-1});     // t^-1
      generators_.push_back({0, 0});   // a (toggle at cursor), its own inverse
      break;
    case GroupKind::FreeGroup:
      for (int i = 1; i <= rank_; ++i) {
        generators_.push_back({i});
        generators_.push_back({-i});
      }
      break;
  }
}

Group Group::zd(int d) {
  if (d < 1) throw ValidationError("ZD requires d >= 1");
  return Group(GroupKind::ZD, d);
}

Group Group::lamplighter() { return Group(GroupKind::Lamplighter, 1); }

Group Group::free_group(int k) {
  if (k < 1) throw ValidationError("FreeGroup requires k >= 1");
  return Group(GroupKind::FreeGroup, k);
}

Group Group::from_name(const std::string& name) {
  if (name == "lamplighter") return lamplighter();
  if (!name.empty() && (name[0] == 'Z' || name[0] == 'F')) {
    int r = 1;
    if (name.size() > 1) {
      char* end = nullptr;
      long v = std::strtol(name.c_str() + 1, &end, 10);
      if (end == nullptr || *end != '\0' || v < 1) {
        throw ValidationError("bad group name: " + name);
      }
      r = static_cast<int>(v);
    } else if (name[0] == 'F') {
      throw ValidationError("free group needs a rank, e.g. F2");
    }
    return name[0] == 'Z' ? zd(r) : free_group(r);
  }
  throw ValidationError("unsupported group: " + name +
                        " (supported: Z, Zd, lamplighter, Fk)");
}

std::string Group::name() const {
  switch (kind_) {
    case GroupKind::ZD:
      return "Z" + std::to_string(rank_);
    case GroupKind::Lamplighter:
      return "lamplighter";
    case GroupKind::FreeGroup:
      return "F" + std::to_string(rank_);
  }
  return "?";
}

Elem Group::identity() const {
  switch (kind_) {
    case GroupKind::ZD:
      return Elem(rank_, 0);
    case GroupKind::Lamplighter:
      return {0};
    case GroupKind::FreeGroup:
      return {};
  }
  return {};
}

namespace {

// Lamplighter helpers: element is [cursor, lamps...] with lamps sorted.
Elem lamp_make(std::int64_t cursor, std::vector<std::int64_t> lamps) {
  std::sort(lamps.begin(), lamps.end());
  Elem e;
  e.reserve(lamps.size() + 1);
  e.push_back(cursor);
  e.insert(e.end(), lamps.begin(), lamps.end());
  return e;
}

std::vector<std::int64_t> lamp_xor(const std::vector<std::int64_t>& a,
                                   const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

}  // namespace

Elem Group::multiply(const Elem& a, const Elem& b) const {
  switch (kind_) {
    case GroupKind::ZD: {
      Elem out(rank_);
      for (int i = 0; i < rank_; ++i) out[i] = a[i] + b[i];
      return out;
    }
    case GroupKind::Lamplighter: {
      // (f1,c1)*(f2,c2) = (shift_{c2}(f1) xor f2, c1+c2)
      std::vector<std::int64_t> f1(a.begin() + 1, a.end());
      std::vector<std::int64_t> f2(b.begin() + 1, b.end());
      for (auto& x : f1) x += b[0];
      return lamp_make(a[0] + b[0], lamp_xor(f1, f2));
    }
    case GroupKind::FreeGroup: {
      Elem out = a;
      for (std::int64_t letter : b) {
        if (!out.empty() && out.back() == -letter) {
          out.pop_back();
        } else {
          out.push_back(letter);
        }
      }
      return out;
    }
  }
  return {};
}

Elem Group::inverse(const Elem& a) const {
  switch (kind_) {
    case GroupKind::ZD: {
      Elem out(rank_);
      for (int i = 0; i < rank_; ++i) out[i] = -a[i];
      return out;
    }
    case GroupKind::Lamplighter: {
      std::vector<std::int64_t> f(a.begin() + 1, a.end());
      for (auto& x : f) x -= a[0];
      return lamp_make(-a[0], std::move(f));
    }
    case GroupKind::FreeGroup: {
      Elem out(a.rbegin(), a.rend());
      for (auto& letter : out) letter = -letter;
      return out;
    }
  }
  return {};
}

std::int64_t Group::word_length_closed_form(const Elem& a) const {
  switch (kind_) {
    case GroupKind::ZD: {
      std::int64_t s = 0;
      for (std::int64_t v : a) s += std::llabs(v);
      return s;
    }
    case GroupKind::FreeGroup:
      return static_cast<std::int64_t>(a.size());
    case GroupKind::Lamplighter:
      return -1;
  }
  return -1;
}

std::string Group::format(const Elem& a) const {
  if (a.empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  return os.str();
}

Elem Group::parse(const std::string& s) const {
  if (s == "e") return {};
  Elem out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw ValidationError("bad element literal: " + s);
    char* end = nullptr;
    const std::int64_t value = std::strtoll(tok.c_str(), &end, 10);
    if (end == nullptr || *end != '\0') {
      throw ValidationError("bad element literal: " + s);
    }
    out.push_back(value);
  }
  switch (kind_) {
    case GroupKind::ZD:
      if (static_cast<int>(out.size()) != rank_) {
        throw ValidationError("element has wrong dimension: " + s);
      }
      break;
    case GroupKind::Lamplighter:
      if (out.empty()) throw ValidationError("lamplighter element needs a cursor: " + s);
      for (std::size_t i = 2; i < out.size(); ++i) {
        if (out[i - 1] >= out[i]) {
          throw ValidationError("lamp positions must be strictly increasing: " + s);
        }
      }
      break;
    case GroupKind::FreeGroup:
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] == 0 || std::llabs(out[i]) > rank_) {
          throw ValidationError("letter out of range: " + s);
        }
        if (i > 0 && out[i] == -out[i - 1]) {
          throw ValidationError("word not reduced: " + s);
        }
      }
      break;
  }
  return out;
}

}  // namespace lpcoh
