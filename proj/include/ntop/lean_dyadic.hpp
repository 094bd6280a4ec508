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

/// Deepest level a lean dyadic dot may sit at. Keeps every endpoint
/// comparison inside 128-bit integer arithmetic.
inline constexpr int kMaxLeanDepth = 60;

/// A dot of sigma_R: the maximal dot TOP, or [n/2^m, (n+2)/2^m].
struct LeanDyadicDot {
  bool top = true;
  std::int64_t n = 0;
  int m = 0;

  static constexpr LeanDyadicDot maximal() { return {}; }
  /// Throws PreconditionError when m is outside [0, kMaxLeanDepth].
  static LeanDyadicDot at(std::int64_t n, int m);

  Rational lower() const;
  Rational upper() const;
  /// 2^(1-m); undefined for TOP.
  Rational width() const;

  auto operator<=>(const LeanDyadicDot&) const = default;
};

std::string to_string(const LeanDyadicDot& a);

/// Parses "TOP" or "D(n,m)".
LeanDyadicDot parse_lean_dot(std::string_view text);

/// Exact comparison helpers on non-TOP dots.
bool lean_apart(const LeanDyadicDot& a, const LeanDyadicDot& b);
bool lean_refines(const LeanDyadicDot& a, const LeanDyadicDot& b);

/// True iff the closed interval [lo, hi] lies inside the dot.
bool lean_contains(const LeanDyadicDot& a, const Rational& lo, const Rational& hi);

/// The three depth-(m+1) dots contained in (n, m): 2n, 2n+1, 2n+2, leftmost
/// first. Throws UnsupportedEnumeration for TOP.
std::vector<LeanDyadicDot> lean_children(const LeanDyadicDot& a);

/// The depth-(m-1) dots containing (n, m); TOP for depth 0.
std::vector<LeanDyadicDot> lean_parents(const LeanDyadicDot& a);

/// Canonical hull: (floor(lo * 2^t), t). Requires lo <= hi and
/// hi - lo <= 2^-t.
LeanDyadicDot hull_at_depth(const Rational& lo, const Rational& hi, int t);

/// The lean dyadic reals sigma_R. Grade is the successor-trail length from
/// TOP, so depth-m dots sit at grade m + 1.
struct SigmaR {
  using Dot = LeanDyadicDot;

  bool apart(const Dot& a, const Dot& b) const { return lean_apart(a, b); }
  bool refines(const Dot& a, const Dot& b) const { return lean_refines(a, b); }
  Dot maximal() const { return Dot::maximal(); }
  std::size_t grade(const Dot& a) const { return a.top ? 0 : static_cast<std::size_t>(a.m) + 1; }
  std::vector<Dot> parents(const Dot& a) const;
  std::vector<Dot> successors(const Dot& a) const { return lean_children(a); }
  std::string name() const { return "sigmaR"; }

  bool operator==(const SigmaR&) const = default;
};

/// sigma_[0,1]: lean dyadic dots inside [0,1] of depth >= 1, with D(0,1)
/// = [0,1] as maximal dot. Finitely branching everywhere.
struct SigmaUnit {
  using Dot = LeanDyadicDot;

  static bool contains(const Dot& a);

  bool apart(const Dot& a, const Dot& b) const { return lean_apart(a, b); }
  bool refines(const Dot& a, const Dot& b) const { return lean_refines(a, b); }
  Dot maximal() const { return Dot::at(0, 1); }
  std::size_t grade(const Dot& a) const;
  std::vector<Dot> parents(const Dot& a) const;
  std::vector<Dot> successors(const Dot& a) const;
  std::string name() const { return "sigma01"; }

  bool operator==(const SigmaUnit&) const = default;
};

/// The canonical sigma_R point of q: p[k] = hull_at_depth(q, q, k).
Point<LeanDyadicDot> from_rational(const Rational& q);

/// All sigma_R dots with m <= max_depth and |n| <= 2^(m + spread), plus TOP.
std::vector<LeanDyadicDot> sigma_r_dots(int max_depth, int spread);

/// All sigma_[0,1] dots with grade <= max_grade.
std::vector<LeanDyadicDot> sigma_unit_dots(int max_grade);

}  // namespace ntop
