// Copyright 2026 The ntop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ntop/point.hpp"
#include "ntop/rational.hpp"

namespace ntop {

/// A dot of an n-ary real space: TOP or [n/b^m, (n+1)/b^m].
struct NAryDot {
  int base = 2;
  bool top = true;
  std::int64_t n = 0;
  int m = 0;

  static NAryDot maximal(int base) { return {base, true, 0, 0}; }
  static NAryDot at(int base, std::int64_t n, int m);

  Rational lower() const;
  Rational upper() const;

  auto operator<=>(const NAryDot&) const = default;
};

std::string to_string(const NAryDot& a);

/// Parses "N(b,n,m)". TOP needs a base and is spelled "TOP" only through
/// NArySpace::parse.
NAryDot parse_nary_dot(std::string_view text);

struct NaryRelations {
  bool apart;
  bool refines;

  bool operator==(const NaryRelations&) const = default;
};

/// Endpoint-exact apartness of a, c and refinement of a into c. Throws
/// SpaceMismatch on differing bases.
NaryRelations nary_dot_relations(int base, const NAryDot& a, const NAryDot& c);

/// The binary/ternary/decimal reals as a tree of b-adic intervals.
///
/// The whole-line variant has the TOP sentinel, with all [n, n+1] as its
/// (infinitely many) successors. The unit variant is [0,1]_b: dots with
/// 0 <= n < b^m and maximal dot N(b,0,0) = [0,1].
class NArySpace {
 public:
  using Dot = NAryDot;

  static NArySpace line(int base);
  static NArySpace unit(int base);

  int base() const { return base_; }
  bool is_unit() const { return unit_; }
  /// Membership of a dot in this space.
  bool contains(const Dot& a) const;

  bool apart(const Dot& a, const Dot& b) const;
  bool refines(const Dot& a, const Dot& b) const;
  Dot maximal() const { return unit_ ? Dot::at(base_, 0, 0) : Dot::maximal(base_); }
  std::size_t grade(const Dot& a) const;
  std::vector<Dot> parents(const Dot& a) const;
  std::vector<Dot> successors(const Dot& a) const;
  std::string name() const;

  Dot parse(std::string_view text) const;

  bool operator==(const NArySpace&) const = default;

 private:
  NArySpace(int base, bool unit);
  void check(const Dot& a) const;

  int base_;
  bool unit_;
};

/// Deepest level supported for a base (keeps endpoints inside 128 bits).
int nary_max_depth(int base);

/// The canonical point of x: p[k] = the depth-k dot [floor(x b^k)/b^k, ...].
/// In the unit variant x = 1 takes the last dot of each level.
Point<NAryDot> from_nary(const NArySpace& space, const Rational& x);

/// Every dot of the unit space with depth <= max_depth.
std::vector<NAryDot> nary_unit_dots(int base, int max_depth);

/// Unit-space dots of depth <= max_depth that either have depth <= full_depth
/// or lie inside [lo, hi]. Keeps deep decimal fragments enumerable.
std::vector<NAryDot> nary_window_dots(int base, int max_depth, int full_depth, const Rational& lo,
                                      const Rational& hi);

}  // namespace ntop
