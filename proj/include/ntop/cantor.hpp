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

#include "ntop/lean_dyadic.hpp"
#include "ntop/morphism.hpp"
#include "ntop/nary.hpp"

namespace ntop {

/// The Cantor function on dots, from [0,1]_ternary to [0,1]_binary.
///
/// Reads the m ternary digits of a. Without a digit 1 the result is the
/// depth-m binary dot with digits d_i / 2. If the first 1 sits at position
/// j, the value is on the plateau c = 0.b_1...b_{j-1}1 (binary) and the
/// result is the upper-side dot [c, c + 2^-m]. Throws PreconditionError for
/// dots outside [0,1].
NAryDot cantor_dot(const NAryDot& a);

RefinementMap<NArySpace, NArySpace> cantor_map();

/// [n/2^m, (n+1)/2^m] -> D(n, m); TOP -> TOP. Whole-line binary reals into
/// sigma_R.
LeanDyadicDot embed_binary_dot(const NAryDot& a);

RefinementMap<NArySpace, SigmaR> embed_binary();

}  // namespace ntop
