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

#include <cstdint>
#include <random>

#include "ntop/lean_dyadic.hpp"
#include "ntop/rational.hpp"

namespace ntop::testing {

/// Deterministic source of random rationals with bounded numerator and
/// denominator.
class RationalSource {
 public:
  explicit RationalSource(std::uint64_t seed) : rng_(seed) {}

  /// Uniform-ish rational in [lo, hi] with denominator at most max_den.
  Rational in(const Rational& lo, const Rational& hi, long max_den = 97) {
    std::uniform_int_distribution<long> den(1, max_den);
    const long d = den(rng_);
    const Rational span = (hi - lo) * d;
    const Integer top = floor(span);
    std::uniform_int_distribution<long> num(0, top.get_si());
    Rational q = lo + Rational(num(rng_), d);
    q.canonicalize();
    return q;
  }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

/// Closed interval of a lean dot, computed from scratch.
inline Rational lo_of(const LeanDyadicDot& a) { return Rational(a.n) / pow2(a.m); }
inline Rational hi_of(const LeanDyadicDot& a) { return Rational(a.n + 2) / pow2(a.m); }

inline bool contains(const LeanDyadicDot& a, const Rational& x) {
  return a.top || (lo_of(a) <= x && x <= hi_of(a));
}

}  // namespace ntop::testing
