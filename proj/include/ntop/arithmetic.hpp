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

#include <functional>
#include <string>
#include <utility>

#include "ntop/lean_dyadic.hpp"
#include "ntop/morphism.hpp"
#include "ntop/product.hpp"

namespace ntop {

using SigmaPair = ProductSpace<SigmaR, SigmaR>;
using PairOfLean = DotOf<SigmaPair>;

SigmaPair sigma_pair();

/// (n, m) -> (-n-2, m).
RefinementMap<SigmaR, SigmaR> neg_map();
/// ((n1, m), (n2, m)) -> (max(n1, n2), m).
RefinementMap<SigmaPair, SigmaR> max_map();
RefinementMap<SigmaPair, SigmaR> min_map();

struct Interval {
  Rational lo;
  Rational hi;
};

using IntervalFunction = std::function<Interval(const Interval&, const Interval&)>;

/// A transducer over sigma_R x sigma_R that evaluates `fn` exactly on the
/// input pair and then, starting from its previous output, repeatedly
/// descends to the leftmost lean child containing the exact image.
Transducer<SigmaPair, SigmaR> interval_transducer(std::string name, IntervalFunction fn);

Transducer<SigmaPair, SigmaR> add_transducer();
/// Four-endpoint product rule.
Transducer<SigmaPair, SigmaR> mul_transducer();

/// Descends from `state` as far as the leftmost-child rule allows while
/// keeping [lo, hi] inside.
LeanDyadicDot descend_into(LeanDyadicDot state, const Rational& lo, const Rational& hi);

/// Re-grids an arbitrary sigma_R point onto one depth per index: output k
/// is a depth-k dot, a child of output k-1, containing the input's current
/// dot. Needed before pairing points whose depths are not synchronized.
Point<LeanDyadicDot> synchronize(Point<LeanDyadicDot> p, std::size_t fuel = kDefaultFuel);

/// Pairs two sigma_R points through synchronize.
Point<PairOfLean> pair_points(Point<LeanDyadicDot> p, Point<LeanDyadicDot> q,
                              std::size_t fuel = kDefaultFuel);

/// A lean dyadic dot with its exact endpoints.
struct DyadicAnswer {
  LeanDyadicDot dot;
  Rational lo;
  Rational hi;
};

/// "D(n,m) = [lo, hi]".
std::string to_string(const DyadicAnswer& a);

/// Pulls p until a dot of depth >= k (width <= 2^(1-k)) appears. At most
/// fuel * (k + 1) pulls; StallError beyond.
DyadicAnswer eval(const Point<LeanDyadicDot>& p, int k, std::size_t fuel = kDefaultFuel);

enum class BallCall { in, out, let };

std::string to_string(BallCall call);

/// IN once a dot lies at or below the line, OUT once a dot lies strictly
/// above it, LET once a dot of width <= 2^-tol still straddles it; first
/// rule to fire in pull order wins.
BallCall hawkeye_decide(const Rational& line, const Point<LeanDyadicDot>& ball, int tol,
                        std::size_t fuel = kDefaultFuel);

}  // namespace ntop
