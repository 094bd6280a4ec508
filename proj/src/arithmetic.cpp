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

#include "ntop/arithmetic.hpp"

#include <algorithm>

#include "ntop/errors.hpp"

namespace ntop {

SigmaPair sigma_pair() { return SigmaPair(SigmaR{}, SigmaR{}); }

RefinementMap<SigmaR, SigmaR> neg_map() {
  return {SigmaR{}, SigmaR{},
          [](const LeanDyadicDot& a) {
            if (a.top) return a;
            return LeanDyadicDot::at(-a.n - 2, a.m);
          },
          "neg"};
}

namespace {

RefinementMap<SigmaPair, SigmaR> extremum_map(std::string name, bool take_max) {
  return {sigma_pair(), SigmaR{},
          [take_max](const PairOfLean& a) {
            if (a.top) return LeanDyadicDot::maximal();
            const auto n = take_max ? std::max(a.first.n, a.second.n) : std::min(a.first.n, a.second.n);
            return LeanDyadicDot::at(n, a.first.m);
          },
          std::move(name)};
}

}  // namespace

RefinementMap<SigmaPair, SigmaR> max_map() { return extremum_map("max", true); }
RefinementMap<SigmaPair, SigmaR> min_map() { return extremum_map("min", false); }

LeanDyadicDot descend_into(LeanDyadicDot state, const Rational& lo, const Rational& hi) {
  if (state.top) {
    // leftmost depth-0 dot [n, n+2] holding [lo, hi]
    const Integer n = ceil(hi) - 2;
    if (Rational(n) > lo) return state;
    state = LeanDyadicDot::at(to_int64(n), 0);
  }
  while (state.m < kMaxLeanDepth) {
    bool moved = false;
    for (const auto& child : lean_children(state)) {
      if (lean_contains(child, lo, hi)) {
        state = child;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return state;
}

Transducer<SigmaPair, SigmaR> interval_transducer(std::string name, IntervalFunction fn) {
  return {sigma_pair(), SigmaR{},
          [fn = std::move(fn)](const LeanDyadicDot& state, const PairOfLean& input) {
            if (input.top) return state;
            const Interval image = fn({input.first.lower(), input.first.upper()},
                                      {input.second.lower(), input.second.upper()});
            return descend_into(state, image.lo, image.hi);
          },
          std::move(name)};
}

Transducer<SigmaPair, SigmaR> add_transducer() {
  return interval_transducer("add", [](const Interval& x, const Interval& y) {
    return Interval{x.lo + y.lo, x.hi + y.hi};
  });
}

Transducer<SigmaPair, SigmaR> mul_transducer() {
  return interval_transducer("mul", [](const Interval& x, const Interval& y) {
    const Rational corners[4] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
    return Interval{*std::min_element(corners, corners + 4), *std::max_element(corners, corners + 4)};
  });
}

Point<LeanDyadicDot> synchronize(Point<LeanDyadicDot> p, std::size_t fuel) {
  struct Cursor {
    std::size_t next_index = 0;
    LeanDyadicDot out;
  };
  return Point<LeanDyadicDot>([p = std::move(p), fuel, cur = Cursor{}]() mutable {
    for (std::size_t tries = 0; tries <= fuel; ++tries) {
      const LeanDyadicDot& d = p[cur.next_index];
      if (d.top) {
        ++cur.next_index;
        continue;
      }
      const Rational lo = d.lower();
      const Rational hi = d.upper();
      std::optional<LeanDyadicDot> next;
      if (cur.out.top) {
        const Integer n = ceil(hi) - 2;
        if (Rational(n) <= lo) next = LeanDyadicDot::at(to_int64(n), 0);
      } else {
        for (const auto& child : lean_children(cur.out)) {
          if (lean_contains(child, lo, hi)) {
            next = child;
            break;
          }
        }
      }
      if (next) {
        cur.out = *next;
        return *next;
      }
      ++cur.next_index;
    }
    throw StallError("synchronize: input did not shrink below the next grid level", fuel);
  });
}

Point<PairOfLean> pair_points(Point<LeanDyadicDot> p, Point<LeanDyadicDot> q, std::size_t fuel) {
  return zip_points(sigma_pair(), synchronize(std::move(p), fuel), synchronize(std::move(q), fuel));
}

std::string to_string(const DyadicAnswer& a) {
  return to_string(a.dot) + " = [" + to_string(a.lo) + ", " + to_string(a.hi) + "]";
}

DyadicAnswer eval(const Point<LeanDyadicDot>& p, int k, std::size_t fuel) {
  if (k < 0) throw PreconditionError("eval: negative precision");
  if (k > kMaxLeanDepth) throw PreconditionError("eval: precision above " + std::to_string(kMaxLeanDepth));
  const std::size_t budget = fuel * (static_cast<std::size_t>(k) + 1);
  for (std::size_t i = 0; i < budget; ++i) {
    const auto& d = p[i];
    if (!d.top && d.m >= k) return {d, d.lower(), d.upper()};
  }
  throw StallError("eval: no dot of depth " + std::to_string(k) + " within " + std::to_string(budget) +
                       " pulls",
                   fuel);
}

std::string to_string(BallCall call) {
  switch (call) {
    case BallCall::in:
      return "IN";
    case BallCall::out:
      return "OUT";
    case BallCall::let:
      return "LET";
  }
  return "?";
}

BallCall hawkeye_decide(const Rational& line, const Point<LeanDyadicDot>& ball, int tol,
                        std::size_t fuel) {
  if (tol < 1) throw PreconditionError("hawkeye_decide: tolerance must be at least 1");
  const Rational limit = pow2(-tol);
  const std::size_t budget = fuel * (static_cast<std::size_t>(tol) + 1);
  for (std::size_t i = 0; i < budget; ++i) {
    const auto& d = ball[i];
    if (d.top) continue;
    if (d.upper() <= line) return BallCall::in;
    if (d.lower() > line) return BallCall::out;
    if (d.width() <= limit) return BallCall::let;
  }
  throw StallError("hawkeye_decide: ball did not narrow to 2^-" + std::to_string(tol), fuel);
}

}  // namespace ntop
