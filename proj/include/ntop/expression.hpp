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

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ntop/arithmetic.hpp"
#include "ntop/rational.hpp"

namespace ntop {

enum class Op { literal, neg, add, mul, min, max };

struct Expr {
  Op op = Op::literal;
  Rational value;  // literal only
  std::vector<std::shared_ptr<const Expr>> args;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// expr   := term (('+'|'-') term)*
/// term   := factor ('*' factor)*
/// factor := rational | neg(expr) | min(expr,expr) | max(expr,expr) | (expr)
/// Subtraction becomes add(x, neg(y)). Throws ParseError with the offending
/// column.
ExprPtr parse_expression(std::string_view text);

/// Exact rational value, used as the oracle.
Rational exact_value(const Expr& e);

/// Canonical prefix rendering, e.g. "add(1/2,neg(1/4))".
std::string to_string(const Expr& e);

/// Lowers to a sigma_R point built from from_rational, the direct maps and
/// the add/mul transducers.
Point<LeanDyadicDot> lower(const Expr& e, std::size_t fuel = kDefaultFuel);

}  // namespace ntop
