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

#include "ntop/rational_interval.hpp"

#include "ntop/errors.hpp"

namespace ntop {

RationalIntervalDot RationalIntervalDot::of(Rational lo, Rational hi) {
  if (!(lo < hi)) throw PreconditionError("rational interval needs lo < hi");
  return {false, std::move(lo), std::move(hi)};
}

std::string to_string(const RationalIntervalDot& a) {
  if (a.top) return "TOP";
  return "[" + to_string(a.lo) + ", " + to_string(a.hi) + "]";
}

}  // namespace ntop
