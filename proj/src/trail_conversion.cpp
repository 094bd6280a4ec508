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

#include "ntop/trail_conversion.hpp"

namespace ntop {

LeanDyadicDot hat_widen(const LeanDyadicDot& c) {
  if (c.top || c.m < 2) return LeanDyadicDot::maximal();
  // n = 4s + i with i in 1..4
  const std::int64_t shifted = c.n - 1;
  const std::int64_t s = shifted >= 0 ? shifted / 4 : -((-shifted + 3) / 4);
  return LeanDyadicDot::at(s, c.m - 2);
}

RefinementMap<SigmaR, SigmaR> widen_map() { return {SigmaR{}, SigmaR{}, hat_widen, "widen"}; }

std::optional<LeanDyadicDot> lean_dot_of_interval(const Rational& lo, const Rational& hi) {
  const Rational width = hi - lo;
  if (width <= 0) return std::nullopt;
  int m = -1;
  if (width == 2) {
    m = 0;
  } else if (width.get_num() == 1) {
    const Integer& den = width.get_den();
    if (mpz_popcount(den.get_mpz_t()) != 1) return std::nullopt;
    m = 1 + static_cast<int>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 1;
  } else {
    return std::nullopt;
  }
  if (m > kMaxLeanDepth) return std::nullopt;
  const Rational scaled = lo * pow2(m);
  if (scaled.get_den() != 1) return std::nullopt;
  return LeanDyadicDot::at(to_int64(scaled.get_num()), m);
}

LeanDyadicDot widened_intersection(const std::vector<LeanDyadicDot>& values) {
  std::optional<Rational> lo, hi;
  for (const auto& v : values) {
    const auto w = hat_widen(v);
    if (w.top) continue;
    if (!lo || w.lower() > *lo) lo = w.lower();
    if (!hi || w.upper() < *hi) hi = w.upper();
  }
  if (!lo) return LeanDyadicDot::maximal();
  if (!(*lo < *hi)) throw ContractViolation("widened values have an empty intersection");
  auto dot = lean_dot_of_interval(*lo, *hi);
  if (!dot) {
    throw ContractViolation("widened intersection [" + to_string(*lo) + ", " + to_string(*hi) +
                            "] is not a lean dyadic dot");
  }
  return *dot;
}

}  // namespace ntop
