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

#include <string>

#include "ntop/rational.hpp"

namespace ntop {

/// A dot of R_rat: (-inf, inf) or a closed rational interval [lo, hi], lo < hi.
/// Serves as the reference space for relation cross-checks; no point
/// constructors target it.
struct RationalIntervalDot {
  bool top = true;
  Rational lo;
  Rational hi;

  static RationalIntervalDot maximal() { return {}; }
  /// Throws PreconditionError unless lo < hi.
  static RationalIntervalDot of(Rational lo, Rational hi);

  friend bool operator==(const RationalIntervalDot& a, const RationalIntervalDot& b) {
    return a.top == b.top && (a.top || (a.lo == b.lo && a.hi == b.hi));
  }
  friend bool operator<(const RationalIntervalDot& a, const RationalIntervalDot& b) {
    if (a.top != b.top) return a.top;
    if (a.top) return false;
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  }
  friend bool operator>(const RationalIntervalDot& a, const RationalIntervalDot& b) { return b < a; }
  friend bool operator<=(const RationalIntervalDot& a, const RationalIntervalDot& b) { return !(b < a); }
  friend bool operator>=(const RationalIntervalDot& a, const RationalIntervalDot& b) { return !(a < b); }
};

std::string to_string(const RationalIntervalDot& a);

struct RationalIntervals {
  using Dot = RationalIntervalDot;

  bool apart(const Dot& a, const Dot& b) const {
    if (a.top || b.top) return false;
    return b.hi < a.lo || a.hi < b.lo;
  }
  bool refines(const Dot& a, const Dot& b) const {
    if (b.top) return true;
    if (a.top) return false;
    return b.lo <= a.lo && a.hi <= b.hi;
  }
  Dot maximal() const { return Dot::maximal(); }

  bool operator==(const RationalIntervals&) const = default;
};

}  // namespace ntop
