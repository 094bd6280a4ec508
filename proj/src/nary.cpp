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

#include "ntop/nary.hpp"

#include <algorithm>
#include <charconv>

#include "ntop/errors.hpp"

namespace ntop {

namespace {

using Wide = __int128;

void check_base(int base) {
  if (base != 2 && base != 3 && base != 10) {
    throw PreconditionError("n-ary base must be 2, 3 or 10, got " + std::to_string(base));
  }
}

Wide wide_pow(int base, int e) {
  Wide r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// Compares x / b^i with y / b^j exactly.
int compare_scaled(int base, std::int64_t x, int i, std::int64_t y, int j) {
  const int depth = std::max(i, j);
  const Wide lhs = static_cast<Wide>(x) * wide_pow(base, depth - i);
  const Wide rhs = static_cast<Wide>(y) * wide_pow(base, depth - j);
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

std::int64_t floor_div(std::int64_t n, std::int64_t d) {
  std::int64_t q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

bool raw_apart(const NAryDot& a, const NAryDot& c) {
  if (a.top || c.top) return false;
  return compare_scaled(a.base, a.n + 1, a.m, c.n, c.m) < 0 ||
         compare_scaled(a.base, c.n + 1, c.m, a.n, a.m) < 0;
}

bool raw_refines(const NAryDot& a, const NAryDot& c) {
  if (c.top) return true;
  if (a.top) return false;
  return compare_scaled(a.base, c.n, c.m, a.n, a.m) <= 0 &&
         compare_scaled(a.base, a.n + 1, a.m, c.n + 1, c.m) <= 0;
}

}  // namespace

int nary_max_depth(int base) {
  check_base(base);
  switch (base) {
    case 2:
      return 60;
    case 3:
      return 37;
    default:
      return 18;
  }
}

NAryDot NAryDot::at(int base, std::int64_t n, int m) {
  check_base(base);
  if (m < 0 || m > nary_max_depth(base)) {
    throw PreconditionError("n-ary depth " + std::to_string(m) + " out of range for base " +
                            std::to_string(base));
  }
  return {base, false, n, m};
}

Rational NAryDot::lower() const { return Rational(Integer(n), ipow(base, m)); }
Rational NAryDot::upper() const { return Rational(Integer(n + 1), ipow(base, m)); }

std::string to_string(const NAryDot& a) {
  if (a.top) return "TOP";
  return "N(" + std::to_string(a.base) + "," + std::to_string(a.n) + "," + std::to_string(a.m) + ")";
}

NAryDot parse_nary_dot(std::string_view text) {
  if (text.size() < 8 || text.substr(0, 2) != "N(" || text.back() != ')') {
    throw ParseError("expected N(b,n,m), got '" + std::string(text) + "'");
  }
  auto body = text.substr(2, text.size() - 3);
  std::int64_t fields[3] = {0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    auto comma = body.find(',');
    auto piece = i < 2 ? body.substr(0, comma) : body;
    if (i < 2 && comma == std::string_view::npos) {
      throw ParseError("malformed n-ary dot '" + std::string(text) + "'");
    }
    auto r = std::from_chars(piece.data(), piece.data() + piece.size(), fields[i]);
    if (r.ec != std::errc{} || r.ptr != piece.data() + piece.size()) {
      throw ParseError("malformed n-ary dot '" + std::string(text) + "'");
    }
    if (i < 2) body.remove_prefix(comma + 1);
  }
  return NAryDot::at(static_cast<int>(fields[0]), fields[1], static_cast<int>(fields[2]));
}

NaryRelations nary_dot_relations(int base, const NAryDot& a, const NAryDot& c) {
  if ((!a.top && a.base != base) || (!c.top && c.base != base) || a.base != c.base) {
    throw SpaceMismatch("n-ary base mismatch");
  }
  return {raw_apart(a, c), raw_refines(a, c)};
}

NArySpace::NArySpace(int base, bool unit) : base_(base), unit_(unit) { check_base(base); }

NArySpace NArySpace::line(int base) { return NArySpace(base, false); }
NArySpace NArySpace::unit(int base) { return NArySpace(base, true); }

bool NArySpace::contains(const Dot& a) const {
  if (a.base != base_) return false;
  if (a.top) return !unit_;
  if (!unit_) return true;
  return a.n >= 0 && compare_scaled(base_, a.n + 1, a.m, 1, 0) <= 0;
}

void NArySpace::check(const Dot& a) const {
  if (a.base != base_) throw SpaceMismatch("n-ary base mismatch");
  if (!contains(a)) throw PreconditionError(to_string(a) + " is not a dot of " + name());
}

bool NArySpace::apart(const Dot& a, const Dot& b) const {
  if (a.base != base_ || b.base != base_) throw SpaceMismatch("n-ary base mismatch");
  return raw_apart(a, b);
}

bool NArySpace::refines(const Dot& a, const Dot& b) const {
  if (a.base != base_ || b.base != base_) throw SpaceMismatch("n-ary base mismatch");
  return raw_refines(a, b);
}

std::size_t NArySpace::grade(const Dot& a) const {
  check(a);
  if (a.top) return 0;
  return unit_ ? static_cast<std::size_t>(a.m) : static_cast<std::size_t>(a.m) + 1;
}

std::vector<NAryDot> NArySpace::parents(const Dot& a) const {
  check(a);
  if (a.top) return {};
  if (a.m == 0) {
    if (unit_) return {};
    return {Dot::maximal(base_)};
  }
  return {Dot::at(base_, floor_div(a.n, base_), a.m - 1)};
}

std::vector<NAryDot> NArySpace::successors(const Dot& a) const {
  check(a);
  if (a.top) {
    throw UnsupportedEnumeration("the maximal dot of " + name() + " has infinitely many successors");
  }
  std::vector<Dot> out;
  for (int d = 0; d < base_; ++d) out.push_back(Dot::at(base_, a.n * base_ + d, a.m + 1));
  return out;
}

std::string NArySpace::name() const {
  std::string b = base_ == 2 ? "binary" : (base_ == 3 ? "ternary" : "decimal");
  return unit_ ? b + "[0,1]" : b;
}

NAryDot NArySpace::parse(std::string_view text) const {
  if (text == "TOP") return maximal();
  Dot a = parse_nary_dot(text);
  check(a);
  return a;
}

Point<NAryDot> from_nary(const NArySpace& space, const Rational& x) {
  if (space.is_unit() && (x < 0 || x > 1)) {
    throw PreconditionError("from_nary: " + to_string(x) + " outside [0,1]");
  }
  return Point<NAryDot>::from_index([space, x](std::size_t k) {
    const int m = static_cast<int>(k);
    const Integer scale = ipow(space.base(), k);
    Integer n = floor(x * scale);
    if (space.is_unit() && n == scale) n -= 1;
    return NAryDot::at(space.base(), to_int64(n), m);
  });
}

std::vector<NAryDot> nary_unit_dots(int base, int max_depth) {
  std::vector<NAryDot> out;
  std::int64_t count = 1;
  for (int m = 0; m <= max_depth; ++m) {
    for (std::int64_t n = 0; n < count; ++n) out.push_back(NAryDot::at(base, n, m));
    count *= base;
  }
  return out;
}

std::vector<NAryDot> nary_window_dots(int base, int max_depth, int full_depth, const Rational& lo,
                                      const Rational& hi) {
  std::vector<NAryDot> out;
  std::int64_t count = 1;
  for (int m = 0; m <= max_depth; ++m) {
    if (m <= full_depth) {
      for (std::int64_t n = 0; n < count; ++n) out.push_back(NAryDot::at(base, n, m));
    } else {
      const Integer scale = ipow(base, m);
      const std::int64_t first = std::max<std::int64_t>(0, to_int64(ceil(lo * scale)));
      const std::int64_t last = std::min<std::int64_t>(count, to_int64(floor(hi * scale))) - 1;
      for (std::int64_t n = first; n <= last; ++n) out.push_back(NAryDot::at(base, n, m));
    }
    count *= base;
  }
  return out;
}

}  // namespace ntop
