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

#include "ntop/cantor.hpp"

#include "ntop/errors.hpp"

namespace ntop {

NAryDot cantor_dot(const NAryDot& a) {
  static const NArySpace ternary = NArySpace::unit(3);
  if (a.base != 3 || !ternary.contains(a)) {
    throw PreconditionError("cantor_map: " + to_string(a) + " is not a ternary dot in [0,1]");
  }
  // most significant digit first
  std::vector<int> digits(static_cast<std::size_t>(a.m));
  std::int64_t rest = a.n;
  for (int i = a.m - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = static_cast<int>(rest % 3);
    rest /= 3;
  }
  std::int64_t bits = 0;
  int used = 0;
  for (int d : digits) {
    bits = 2 * bits + (d == 0 ? 0 : 1);
    ++used;
    if (d == 1) break;
  }
  return NAryDot::at(2, bits << (a.m - used), a.m);
}

RefinementMap<NArySpace, NArySpace> cantor_map() {
  return {NArySpace::unit(3), NArySpace::unit(2), cantor_dot, "cantor"};
}

LeanDyadicDot embed_binary_dot(const NAryDot& a) {
  if (a.base != 2) throw SpaceMismatch("embed_binary expects a binary dot");
  if (a.top) return LeanDyadicDot::maximal();
  return LeanDyadicDot::at(a.n, a.m);
}

RefinementMap<NArySpace, SigmaR> embed_binary() {
  return {NArySpace::line(2), SigmaR{}, embed_binary_dot, "embed_binary"};
}

}  // namespace ntop
