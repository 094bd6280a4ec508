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
#include <string>
#include <utility>
#include <vector>

#include "ntop/errors.hpp"
#include "ntop/point.hpp"
#include "ntop/space.hpp"

namespace ntop {

/// A dot of a finite product: TOP, or two component dots of equal grade.
template <class D1, class D2>
struct PairDot {
  bool top = true;
  D1 first{};
  D2 second{};

  auto operator<=>(const PairDot&) const = default;
};

template <class D1, class D2>
std::string to_string(const PairDot<D1, D2>& a) {
  if (a.top) return "TOP";
  return "P(" + to_string(a.first) + "," + to_string(a.second) + ")";
}

/// Product of two graded spaces. Component grades are kept synchronized so
/// the product is again a trea with the component grading.
template <GradedSpace S1, GradedSpace S2>
class ProductSpace {
 public:
  using Dot = PairDot<DotOf<S1>, DotOf<S2>>;

  ProductSpace(S1 left, S2 right) : left_(std::move(left)), right_(std::move(right)) {}

  const S1& left() const { return left_; }
  const S2& right() const { return right_; }

  /// Throws PreconditionError for pairs of unequal grade.
  Dot pair(DotOf<S1> a, DotOf<S2> b) const {
    if (left_.grade(a) != right_.grade(b)) {
      throw PreconditionError("product dot " + to_string(a) + " x " + to_string(b) +
                              " has unequal component grades");
    }
    if (left_.grade(a) == 0) return Dot{};
    return Dot{false, std::move(a), std::move(b)};
  }

  bool apart(const Dot& a, const Dot& b) const {
    if (a.top || b.top) return false;
    return left_.apart(a.first, b.first) || right_.apart(a.second, b.second);
  }

  bool refines(const Dot& a, const Dot& b) const {
    if (b.top) return true;
    if (a.top) return false;
    return left_.refines(a.first, b.first) && right_.refines(a.second, b.second);
  }

  Dot maximal() const { return Dot{}; }

  std::size_t grade(const Dot& a) const { return a.top ? 0 : left_.grade(a.first); }

  std::vector<Dot> parents(const Dot& a) const {
    if (a.top) return {};
    if (grade(a) == 1) return {Dot{}};
    std::vector<Dot> out;
    for (const auto& p1 : left_.parents(a.first)) {
      for (const auto& p2 : right_.parents(a.second)) out.push_back(Dot{false, p1, p2});
    }
    return out;
  }

  std::vector<Dot> successors(const Dot& a) const {
    const auto s1 = left_.successors(a.top ? left_.maximal() : a.first);
    const auto s2 = right_.successors(a.top ? right_.maximal() : a.second);
    std::vector<Dot> out;
    out.reserve(s1.size() * s2.size());
    for (const auto& x : s1) {
      for (const auto& y : s2) out.push_back(Dot{false, x, y});
    }
    return out;
  }

  std::string name() const { return "product:" + left_.name() + "x" + right_.name(); }

  bool operator==(const ProductSpace&) const = default;

 private:
  S1 left_;
  S2 right_;
};

/// Pairs two points indexwise. Both streams must carry equal grades at each
/// index (e.g. canonical points).
template <GradedSpace S1, GradedSpace S2>
Point<PairDot<DotOf<S1>, DotOf<S2>>> zip_points(const ProductSpace<S1, S2>& space,
                                                Point<DotOf<S1>> p, Point<DotOf<S2>> q) {
  return Point<PairDot<DotOf<S1>, DotOf<S2>>>::from_index(
      [space, p = std::move(p), q = std::move(q)](std::size_t k) { return space.pair(p[k], q[k]); });
}

/// Every equal-grade pair drawn from two dot lists (grade-0 pairs collapse
/// to TOP, listed once).
template <GradedSpace S1, GradedSpace S2>
std::vector<PairDot<DotOf<S1>, DotOf<S2>>> product_dots(const ProductSpace<S1, S2>& space,
                                                        const std::vector<DotOf<S1>>& left,
                                                        const std::vector<DotOf<S2>>& right) {
  std::vector<PairDot<DotOf<S1>, DotOf<S2>>> out{space.maximal()};
  for (const auto& a : left) {
    const auto ga = space.left().grade(a);
    if (ga == 0) continue;
    for (const auto& b : right) {
      if (space.right().grade(b) == ga) out.push_back({false, a, b});
    }
  }
  return out;
}

}  // namespace ntop
