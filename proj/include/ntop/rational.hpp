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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace ntop {

using Integer = mpz_class;
using Rational = mpq_class;

/// 2^e as an exact rational; e may be negative.
Rational pow2(long e);

/// b^e for a small base and non-negative exponent.
Integer ipow(unsigned long base, unsigned long e);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Parses "p/q", "-7", or a decimal literal such as "0.999" into an exact
/// rational. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering: "3/4", "-1/3", "5".
std::string to_string(const Rational& q);

/// Converts an Integer to int64, throwing PreconditionError when it does
/// not fit.
std::int64_t to_int64(const Integer& z);

}  // namespace ntop
