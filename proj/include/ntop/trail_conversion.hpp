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

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "ntop/errors.hpp"
#include "ntop/fragment.hpp"
#include "ntop/lean_dyadic.hpp"
#include "ntop/morphism.hpp"

namespace ntop {

/// Two-level widening of a sigma_R dot. For
/// c = [(4s+i)/2^(t+2), (4s+i+2)/2^(t+2)] with 1 <= i <= 4 the result is
/// [s/2^t, (s+2)/2^t]; dots of depth 0 and TOP widen to TOP.
LeanDyadicDot hat_widen(const LeanDyadicDot& c);

/// hat_widen as a sigma_R endomorphism.
RefinementMap<SigmaR, SigmaR> widen_map();

/// The lean dyadic dot whose interval is exactly [lo, hi], if any.
std::optional<LeanDyadicDot> lean_dot_of_interval(const Rational& lo, const Rational& hi);

/// Intersection of the widenings of a set of pairwise touching values.
/// Throws ContractViolation when the intersection is empty or not a lean
/// dyadic dot.
LeanDyadicDot widened_intersection(const std::vector<LeanDyadicDot>& values);

/// Converts a trail morphism (transducer) from a spraid into sigma_R to a
/// refinement morphism g(a) = meet of hat_widen(v) over the value set of a.
///
/// The value set of a collects the transducer's outputs over all successor
/// trails to a and is computed by memoized dynamic programming over
/// immediate predecessors:
///   values(TOP) = {TOP}
///   values(a)   = { step(v, a) : b parent of a, v in values(b) }.
/// The memo is shared by copies, so the returned map keeps extending lazily
/// past any fragment it was primed on. Not safe for concurrent use.
template <GradedSpace S>
class TrailConversion {
 public:
  using Dot = DotOf<S>;

  TrailConversion(Transducer<S, SigmaR> f, S space)
      : state_(std::make_shared<State>(State{std::move(f), std::move(space), {}, {}})) {}

  /// Sorted, duplicate-free. Throws ContractViolation if two members do not
  /// touch.
  const std::vector<LeanDyadicDot>& value_set(const Dot& a) const {
    auto& memo = state_->values;
    if (auto it = memo.find(a); it != memo.end()) return it->second;
    std::vector<LeanDyadicDot> out;
    if (a == state_->space.maximal()) {
      out.push_back(LeanDyadicDot::maximal());
    } else {
      for (const auto& b : state_->space.parents(a)) {
        for (const auto& v : value_set(b)) out.push_back(state_->f.step(v, a));
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = i + 1; j < out.size(); ++j) {
          if (lean_apart(out[i], out[j])) {
            throw ContractViolation("value set of " + to_string(a) + " holds apart values " +
                                    to_string(out[i]) + " and " + to_string(out[j]));
          }
        }
      }
    }
    return memo.emplace(a, std::move(out)).first->second;
  }

  LeanDyadicDot image(const Dot& a) const {
    auto& memo = state_->images;
    if (auto it = memo.find(a); it != memo.end()) return it->second;
    auto g = widened_intersection(value_set(a));
    memo.emplace(a, g);
    return g;
  }

  RefinementMap<S, SigmaR> as_map() const {
    auto self = *this;
    return {state_->space, SigmaR{}, [self](const Dot& a) { return self.image(a); },
            "widen(" + state_->f.name + ")"};
  }

  std::size_t memo_size() const { return state_->values.size(); }

 private:
  struct State {
    Transducer<S, SigmaR> f;
    S space;
    std::map<Dot, std::vector<LeanDyadicDot>> values;
    std::map<Dot, LeanDyadicDot> images;
  };
  std::shared_ptr<State> state_;
};

/// Builds g over the whole fragment up front, so any contract violation
/// surfaces here; the returned map extends lazily to other dots.
template <GradedSpace S>
RefinementMap<S, SigmaR> trail_to_refinement(const Transducer<S, SigmaR>& f,
                                             const GradedFragment<S>& fragment) {
  TrailConversion<S> conversion(f, fragment.space());
  for (const auto& a : fragment.dots()) (void)conversion.image(a);
  return conversion.as_map();
}

}  // namespace ntop
