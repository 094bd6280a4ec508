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

#include "ntop/lean_dyadic.hpp"

#include <algorithm>
#include <charconv>

#include "ntop/errors.hpp"

namespace ntop {

namespace {

using Wide = __int128;

// Compares x / 2^i with y / 2^j exactly.
int compare_scaled(std::int64_t x, int i, std::int64_t y, int j) {
  const int depth = std::max(i, j);
  const Wide lhs = static_cast<Wide>(x) * (static_cast<Wide>(1) << (depth - i));
  const Wide rhs = static_cast<Wide>(y) * (static_cast<Wide>(1) << (depth - j));
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

std::int64_t floor_div2(std::int64_t n) { return n >= 0 ? n / 2 : -((-n + 1) / 2); }

}  // namespace

LeanDyadicDot LeanDyadicDot::at(std::int64_t n, int m) {
  if (m < 0 || m > kMaxLeanDepth) {
    throw PreconditionError("lean dyadic depth " + std::to_string(m) + " outside [0, " +
                            std::to_string(kMaxLeanDepth) + "]");
  }
  constexpr std::int64_t limit = std::int64_t{1} << 62;
  if (n > limit || n < -limit) throw PreconditionError("lean dyadic numerator out of range");
  return {false, n, m};
}

Rational LeanDyadicDot::lower() const { return Rational(n) * pow2(-m); }
Rational LeanDyadicDot::upper() const { return Rational(n + 2) * pow2(-m); }
Rational LeanDyadicDot::width() const { return pow2(1 - m); }

std::string to_string(const LeanDyadicDot& a) {
  if (a.top) return "TOP";
  return "D(" + std::to_string(a.n) + "," + std::to_string(a.m) + ")";
}

LeanDyadicDot parse_lean_dot(std::string_view text) {
  if (text == "TOP") return LeanDyadicDot::maximal();
  if (text.size() < 6 || text.substr(0, 2) != "D(" || text.back() != ')') {
    throw ParseError("expected TOP or D(n,m), got '" + std::string(text) + "'");
  }
  auto body = text.substr(2, text.size() - 3);
  auto comma = body.find(',');
  if (comma == std::string_view::npos) throw ParseError("missing ',' in '" + std::string(text) + "'");
  std::int64_t n = 0;
  int m = 0;
  auto n_text = body.substr(0, comma);
  auto m_text = body.substr(comma + 1);
  auto rn = std::from_chars(n_text.data(), n_text.data() + n_text.size(), n);
  auto rm = std::from_chars(m_text.data(), m_text.data() + m_text.size(), m);
  if (rn.ec != std::errc{} || rn.ptr != n_text.data() + n_text.size() || rm.ec != std::errc{} ||
      rm.ptr != m_text.data() + m_text.size()) {
    throw ParseError("malformed dot '" + std::string(text) + "'");
  }
  return LeanDyadicDot::at(n, m);
}

bool lean_apart(const LeanDyadicDot& a, const LeanDyadicDot& b) {
  if (a.top || b.top) return false;
  // a.hi < b.lo or b.hi < a.lo
  return compare_scaled(a.n + 2, a.m, b.n, b.m) < 0 || compare_scaled(b.n + 2, b.m, a.n, a.m) < 0;
}

bool lean_refines(const LeanDyadicDot& a, const LeanDyadicDot& b) {
  if (b.top) return true;
  if (a.top) return false;
  return compare_scaled(b.n, b.m, a.n, a.m) <= 0 && compare_scaled(a.n + 2, a.m, b.n + 2, b.m) <= 0;
}

bool lean_contains(const LeanDyadicDot& a, const Rational& lo, const Rational& hi) {
  if (a.top) return true;
  return a.lower() <= lo && hi <= a.upper();
}

std::vector<LeanDyadicDot> lean_children(const LeanDyadicDot& a) {
  if (a.top) {
    throw UnsupportedEnumeration("the maximal dot of sigma_R has infinitely many successors");
  }
  return {LeanDyadicDot::at(2 * a.n, a.m + 1), LeanDyadicDot::at(2 * a.n + 1, a.m + 1),
          LeanDyadicDot::at(2 * a.n + 2, a.m + 1)};
}

std::vector<LeanDyadicDot> lean_parents(const LeanDyadicDot& a) {
  if (a.top) return {};
  if (a.m == 0) return {LeanDyadicDot::maximal()};
  // (k, m-1) contains (n, m) iff n - 2 <= 2k <= n.
  std::vector<LeanDyadicDot> out;
  const std::int64_t hi = floor_div2(a.n);
  for (std::int64_t k = floor_div2(a.n - 1); k <= hi; ++k) {
    if (2 * k >= a.n - 2) out.push_back(LeanDyadicDot::at(k, a.m - 1));
  }
  return out;
}

LeanDyadicDot hull_at_depth(const Rational& lo, const Rational& hi, int t) {
  if (t < 0) throw PreconditionError("hull_at_depth: negative depth");
  if (hi < lo) throw PreconditionError("hull_at_depth: lo > hi");
  if (hi - lo > pow2(-t)) {
    throw PreconditionError("hull_at_depth: interval wider than 2^-" + std::to_string(t));
  }
  return LeanDyadicDot::at(to_int64(floor(lo * pow2(t))), t);
}

std::vector<LeanDyadicDot> SigmaR::parents(const Dot& a) const { return lean_parents(a); }

bool SigmaUnit::contains(const Dot& a) {
  if (a.top || a.m < 1 || a.n < 0) return false;
  return compare_scaled(a.n + 2, a.m, 1, 0) <= 0;
}

std::size_t SigmaUnit::grade(const Dot& a) const {
  if (!contains(a)) throw PreconditionError(to_string(a) + " is not a sigma_[0,1] dot");
  return static_cast<std::size_t>(a.m) - 1;
}

std::vector<LeanDyadicDot> SigmaUnit::parents(const Dot& a) const {
  if (!contains(a)) throw PreconditionError(to_string(a) + " is not a sigma_[0,1] dot");
  if (a.m == 1) return {};
  std::vector<Dot> out;
  for (const auto& p : lean_parents(a)) {
    if (contains(p)) out.push_back(p);
  }
  return out;
}

std::vector<LeanDyadicDot> SigmaUnit::successors(const Dot& a) const {
  if (!contains(a)) throw PreconditionError(to_string(a) + " is not a sigma_[0,1] dot");
  return lean_children(a);
}

Point<LeanDyadicDot> from_rational(const Rational& q) {
  return Point<LeanDyadicDot>::from_index(
      [q](std::size_t k) { return hull_at_depth(q, q, static_cast<int>(k)); });
}

std::vector<LeanDyadicDot> sigma_r_dots(int max_depth, int spread) {
  std::vector<LeanDyadicDot> out{LeanDyadicDot::maximal()};
  for (int m = 0; m <= max_depth; ++m) {
    const std::int64_t bound = std::int64_t{1} << (m + spread);
    for (std::int64_t n = -bound; n <= bound; ++n) out.push_back(LeanDyadicDot::at(n, m));
  }
  return out;
}

std::vector<LeanDyadicDot> sigma_unit_dots(int max_grade) {
  std::vector<LeanDyadicDot> out;
  for (int m = 1; m <= max_grade + 1; ++m) {
    const std::int64_t last = (std::int64_t{1} << m) - 2;
    for (std::int64_t n = 0; n <= last; ++n) out.push_back(LeanDyadicDot::at(n, m));
  }
  return out;
}

}  // namespace ntop
