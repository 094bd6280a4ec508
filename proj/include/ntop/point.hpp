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

#include <cstddef>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "ntop/errors.hpp"
#include "ntop/space.hpp"

namespace ntop {

/// Default number of non-productive pulls a lazy stream tolerates before
/// raising StallError.
inline constexpr std::size_t kDefaultFuel = 64;

/// A point: an infinite, pull-based stream of dots p[0], p[1], ... .
///
/// Produced dots are memoized, so repeated `at()` calls are cheap and copies
/// of a Point share one cursor. A Point is a single-consumer object: it may
/// be handed to another thread but must not be read concurrently.
template <class Dot>
class Point {
 public:
  /// Called once per index, in increasing order.
  using Producer = std::function<Dot()>;

  explicit Point(Producer next) : state_(std::make_shared<State>(State{std::move(next), {}})) {}

  /// A point given by a closed form for the k-th dot.
  static Point from_index(std::function<Dot(std::size_t)> dot_at) {
    return Point([dot_at = std::move(dot_at), k = std::size_t{0}]() mutable { return dot_at(k++); });
  }

  const Dot& at(std::size_t k) const {
    auto& cache = state_->cache;
    while (cache.size() <= k) cache.push_back(state_->next());
    return cache[k];
  }

  const Dot& operator[](std::size_t k) const { return at(k); }

  std::vector<Dot> prefix(std::size_t k) const {
    if (k > 0) at(k - 1);
    return {state_->cache.begin(), state_->cache.begin() + static_cast<std::ptrdiff_t>(k)};
  }

  /// Number of dots produced so far.
  std::size_t pulled() const { return state_->cache.size(); }

 private:
  struct State {
    Producer next;
    std::deque<Dot> cache;  // stable references across growth
  };
  std::shared_ptr<State> state_;
};

enum class Side { first, second };

/// Index at which a dot-level apartness was observed.
struct ApartnessWitness {
  std::size_t index = 0;
  Side side = Side::first;

  bool operator==(const ApartnessWitness&) const = default;
};

/// Least n < fuel with p[n] # q[n]. Absence does not prove equivalence.
template <Space S>
std::optional<ApartnessWitness> points_apart_within(const S& space, const Point<DotOf<S>>& p,
                                                    const Point<DotOf<S>>& q, std::size_t fuel) {
  if (fuel == 0) throw PreconditionError("points_apart_within: fuel must be at least 1");
  for (std::size_t n = 0; n < fuel; ++n) {
    if (space.apart(p[n], q[n])) return ApartnessWitness{n, Side::first};
  }
  return std::nullopt;
}

/// True iff p[0..k) descends strictly at every step.
template <Space S>
bool point_prefix_valid(const S& space, const Point<DotOf<S>>& p, std::size_t k) {
  if (k == 0) throw PreconditionError("point_prefix_valid: k must be at least 1");
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (!strictly_refines(space, p[i + 1], p[i])) return false;
  }
  return true;
}

/// Semi-decides "p begins with a": some p[m], m < fuel, strictly refines a.
template <Space S>
bool begins_with(const S& space, const Point<DotOf<S>>& p, const DotOf<S>& a, std::size_t fuel) {
  if (fuel == 0) throw PreconditionError("begins_with: fuel must be at least 1");
  for (std::size_t m = 0; m < fuel; ++m) {
    if (strictly_refines(space, p[m], a)) return true;
  }
  return false;
}

/// Finite check of the choose-between-apart clause of a point: for apart
/// dots a and b, some p[m] (m < fuel) is apart from a or from b. The
/// witness side names which one.
template <Space S>
std::optional<ApartnessWitness> chooses_between(const S& space, const Point<DotOf<S>>& p,
                                                const DotOf<S>& a, const DotOf<S>& b,
                                                std::size_t fuel) {
  if (!space.apart(a, b)) throw PreconditionError("chooses_between: dots must be apart");
  for (std::size_t m = 0; m < fuel; ++m) {
    if (space.apart(p[m], a)) return ApartnessWitness{m, Side::first};
    if (space.apart(p[m], b)) return ApartnessWitness{m, Side::second};
  }
  return std::nullopt;
}

}  // namespace ntop
