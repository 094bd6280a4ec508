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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "ntop/arithmetic.hpp"
#include "ntop/axioms.hpp"
#include "ntop/baire.hpp"
#include "ntop/cantor.hpp"
#include "ntop/commands.hpp"
#include "ntop/expression.hpp"
#include "ntop/fragment.hpp"
#include "ntop/lean_dyadic.hpp"
#include "ntop/metric_fann.hpp"
#include "ntop/morphism.hpp"
#include "ntop/nary.hpp"
#include "ntop/product.hpp"
#include "ntop/trail_conversion.hpp"
#include "test_support.hpp"

namespace {

using namespace ntop;
using ntop::testing::RationalSource;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// Ternary digit expansion of x in [0,1], read until the first digit 1 or
// until the remainder repeats; the remaining bits form a geometric series.
Rational cantor_oracle(Rational x) {
  if (x == 1) return 1;
  std::vector<int> bits;
  std::map<Rational, std::size_t> seen;
  auto value_of = [&](std::size_t from, std::size_t to) {
    Rational v = 0;
    for (std::size_t i = from; i < to; ++i) {
      if (bits[i]) v += pow2(-static_cast<int>(i) - 1);
    }
    return v;
  };
  for (std::size_t k = 0;; ++k) {
    if (auto it = seen.find(x); it != seen.end()) {
      const std::size_t j = it->second;
      const Rational scale = 1 - pow2(-static_cast<int>(k - j));
      return value_of(0, j) + value_of(j, k) / scale;
    }
    seen.emplace(x, k);
    const Rational x3 = 3 * x;
    const Integer d = floor(x3);
    x = x3 - Rational(d);
    if (d == 1) return value_of(0, k) + pow2(-static_cast<int>(k) - 1);
    bits.push_back(d == 2 ? 1 : 0);
  }
}

template <Space S>
void run_axioms_on(Outcome& out, std::size_t& total, const S& space, std::vector<DotOf<S>> dots) {
  const auto report = check_axioms(space, std::move(dots));
  total += report.dots;
  if (!report.all_passed()) {
    for (const auto& r : report.results) {
      if (!r.passed) out.fail(space.name() + ": " + r.name + " fails at " + r.counterexample);
    }
  }
}

Outcome axiom_suite() {
  Outcome out;
  std::size_t total = 0;
  const Rational half(1, 2);
  const Rational eps(1, 1000);
  run_axioms_on(out, total, SigmaR{}, sigma_r_dots(8, 3));
  run_axioms_on(out, total, SigmaUnit{}, sigma_unit_dots(8));
  run_axioms_on(out, total, NArySpace::unit(2), nary_unit_dots(2, 6));
  run_axioms_on(out, total, NArySpace::unit(3), nary_unit_dots(3, 6));
  run_axioms_on(out, total, NArySpace::unit(10), nary_window_dots(10, 6, 3, half - eps, half + eps));
  run_axioms_on(out, total, BaireSpace::baire(), baire_dots(4, 3));
  run_axioms_on(out, total, BaireSpace::cantor(), baire_dots(4, 2));
  const auto pair = sigma_pair();
  const auto side = sigma_r_dots(4, 1);
  run_axioms_on(out, total, pair, product_dots(pair, side, side));
  std::size_t fanns = 0;
  for (const auto& name : builtin_presentation_names()) {
    const auto fann = build_fann(*builtin_presentation(name, 6), 6);
    run_axioms_on(out, total, fann, fann.dots());
    ++fanns;
  }
  if (out.pass) out.detail = "8 fragments and " + std::to_string(fanns) + " fanns, " + std::to_string(total) + " dots";
  return out;
}

Outcome exact_arithmetic() {
  Outcome out;
  RationalSource rng(20260418);
  const Rational limit = pow2(-15);
  std::size_t checked = 0;
  for (int i = 0; i < 200; ++i) {
    const Rational x = rng.in(-8, 8);
    const Rational y = rng.in(-8, 8);
    const std::string a = "(" + to_string(x) + ")";
    const std::string b = "(" + to_string(y) + ")";
    const std::vector<std::pair<std::string, Rational>> cases = {
        {a + " + " + b, x + y},
        {a + " * " + b, x * y},
        {"min(" + a + ", " + b + ")", x < y ? x : y},
        {"max(" + a + ", " + b + ")", x < y ? y : x},
        {"neg(" + a + ")", -x},
    };
    for (const auto& [text, exact] : cases) {
      try {
        const auto answer = eval(lower(*parse_expression(text), kDefaultFuel), 16, kDefaultFuel);
        if (!(answer.lo <= exact && exact <= answer.hi)) {
          out.fail(text + " gave " + to_string(answer) + ", exact " + to_string(exact));
        } else if (answer.hi - answer.lo > limit) {
          out.fail(text + " gave width " + to_string(answer.hi - answer.lo));
        }
      } catch (const Error& e) {
        out.fail(text + ": " + e.what());
      }
      ++checked;
    }
  }
  if (out.pass) out.detail = std::to_string(checked) + " evaluations contain the exact value";
  return out;
}

Outcome trail_conversion() {
  Outcome out;
  const auto pair = sigma_pair();
  std::vector<LeanDyadicDot> side;
  for (int m = 0; m <= 6; ++m) {
    for (std::int64_t n = -16; n <= 16; ++n) side.push_back(LeanDyadicDot::at(n, m));
  }
  const auto fragment = GradedFragment<SigmaPair>::closure(pair, product_dots(pair, side, side));
  const auto add = add_transducer();
  std::optional<RefinementMap<SigmaPair, SigmaR>> g;
  try {
    g = trail_to_refinement(add, fragment);
  } catch (const ContractViolation& e) {
    out.fail(std::string("conversion: ") + e.what());
    return out;
  }
  if (auto bad = find_monotonicity_violation(*g, fragment)) {
    out.fail("not monotone at " + to_string(fragment.dot(bad->first)) + " refining " +
             to_string(fragment.dot(bad->second)));
  }
  RationalSource rng(9301);
  for (int i = 0; i < 50; ++i) {
    const Rational x = rng.in(-8, 8);
    const Rational y = rng.in(-8, 8);
    try {
      const auto p = pair_points(from_rational(x), from_rational(y));
      const auto via_map = apply_map(*g, p);
      const auto via_steps = apply_transducer(add, p);
      if (auto w = points_apart_within(SigmaR{}, via_map, via_steps, 24)) {
        out.fail("apart at index " + std::to_string(w->index) + " for " + to_string(x) + " + " + to_string(y));
      }
    } catch (const Error& e) {
      out.fail(to_string(x) + " + " + to_string(y) + ": " + e.what());
    }
  }
  if (out.pass) out.detail = std::to_string(fragment.size()) + " dots monotone, 50 pairs agree at fuel 24";
  return out;
}

Outcome cantor_function() {
  Outcome out;
  const std::regex shape(R"(N\(2,-?\d+,\d+\) = \[([-0-9/]+), ([-0-9/]+)\]\n)");
  const Rational limit = pow2(-11);
  const std::vector<std::pair<Rational, Rational>> cases = {
      {0, 0},
      {1, 1},
      {Rational(1, 4), Rational(1, 3)},
      {Rational(7, 9), Rational(3, 4)},
      {Rational(22, 27), Rational(3, 4)},
      {Rational(8, 9), Rational(3, 4)},
  };
  for (const auto& [x, expected] : cases) {
    const Rational exact = cantor_oracle(x);
    if (exact != expected) out.fail("oracle gives " + to_string(exact) + " at " + to_string(x));
    std::ostringstream o;
    std::ostringstream e;
    if (run_cantor(to_string(x), 12, kDefaultFuel, {o, e}) != kExitOk) {
      out.fail("cantor " + to_string(x) + ": " + e.str());
      continue;
    }
    std::smatch m;
    const std::string text = o.str();
    if (!std::regex_match(text, m, shape)) {
      out.fail("unexpected output '" + text + "'");
      continue;
    }
    const Rational lo = parse_rational(m[1].str());
    const Rational hi = parse_rational(m[2].str());
    if (!(lo <= exact && exact <= hi) || hi - lo > limit) {
      out.fail("f(" + to_string(x) + ") reported as [" + m[1].str() + ", " + m[2].str() + "]");
    }
  }
  const auto fragment = GradedFragment<NArySpace>::build(NArySpace::unit(3), nary_unit_dots(3, 7));
  if (!check_monotone(cantor_map(), fragment)) out.fail("dot map not monotone at ternary depth 7");
  if (out.pass) out.detail = "6 values match the digit oracle, monotone on " + std::to_string(fragment.size()) + " dots";
  return out;
}

Outcome unglueing() {
  Outcome out;
  const auto base = GradedFragment<SigmaR>::closure(SigmaR{}, sigma_r_dots(2, 1));
  const auto tree = unglue(base);
  const auto target = LeanDyadicDot::at(2, 1);
  std::vector<Trail<LeanDyadicDot>> copies;
  for (const auto& t : tree.dots()) {
    if (!t.empty() && t.last() == target) copies.push_back(t);
  }
  const std::vector<Trail<LeanDyadicDot>> expected = {
      {{LeanDyadicDot::at(0, 0), target}},
      {{LeanDyadicDot::at(1, 0), target}},
  };
  if (copies != expected) {
    std::string got;
    for (const auto& t : copies) got += " " + to_string(t);
    out.fail("[1,2] copies:" + got);
  }
  if (!is_tree(tree)) out.fail("unglued fragment is not a tree");
  if (out.pass) out.detail = "[1,2] appears as " + to_string(copies[0]) + " and " + to_string(copies[1]);
  return out;
}

Outcome metric_fann() {
  Outcome out;
  constexpr int kLevel = 6;
  const auto pres = unit_interval_presentation(kLevel);
  std::optional<Fann> built;
  try {
    built = build_fann(pres, kLevel);
  } catch (const Error& e) {
    out.fail(std::string("construction: ") + e.what());
    return out;
  }
  const Fann& fann = *built;
  std::size_t gaps = 0;
  for (const auto& a : fann.dots()) {
    for (const auto& b : fann.successors(a)) {
      if (fann.grade(b) != fann.grade(a) + 1) out.fail("grading breaks at " + to_string(a) + " > " + to_string(b));
    }
    if (!a.top && a.level > 0) {
      bool has = false;
      for (const auto& p : fann.parents(a)) has = has || (!p.top && p.level + 1 == a.level);
      if (!has) out.fail(to_string(a) + " has no predecessor one level up");
    }
    for (const auto& b : fann.dots()) {
      if (a.top || b.top || !fann.apart(a, b)) continue;
      const Rational gap = abs(pres.value({a.level, a.index}) - pres.value({b.level, b.index}));
      if (gap <= pow2(-static_cast<int>(a.level)) + pow2(-static_cast<int>(b.level))) {
        out.fail(to_string(a) + " and " + to_string(b) + " declared apart with center gap " + to_string(gap));
      }
      ++gaps;
    }
  }
  RationalSource rng(4242);
  for (int i = 0; i < 20; ++i) {
    const Rational x = rng.in(0, 1);
    const auto chain = greedy_chain(fann, x);
    for (int k = 0; k <= kLevel; ++k) {
      const Rational v = fann_point_value(fann, chain, static_cast<std::size_t>(k));
      if (abs(v - x) > pow2(2 - k)) out.fail("chain for " + to_string(x) + " strays at level " + std::to_string(k));
    }
  }
  if (out.pass) {
    out.detail = std::to_string(fann.dots().size()) + " dots, " + std::to_string(gaps / 2) +
                 " apart pairs verified, 20 chains";
  }
  return out;
}

Outcome hawkeye() {
  Outcome out;
  RationalSource rng(777);
  for (int i = 0; i < 100; ++i) {
    const Rational line = rng.in(-8, 8);
    Rational ball = rng.in(-8, 8);
    while (ball == line) ball = rng.in(-8, 8);
    const BallCall want = ball <= line ? BallCall::in : BallCall::out;
    const BallCall got = hawkeye_decide(line, from_rational(ball), 20);
    if (got != want) out.fail("line " + to_string(line) + ", ball " + to_string(ball) + ": " + to_string(got));
  }
  const std::vector<Rational> ties = {0, 1, -3, Rational(1, 3), Rational(-5, 8), Rational(22, 7)};
  for (const auto& x : ties) {
    for (int tol = 1; tol <= 12; ++tol) {
      const BallCall got = hawkeye_decide(x, from_rational(x), tol);
      if (got != BallCall::let) out.fail("tie at " + to_string(x) + ", tolerance " + std::to_string(tol) + ": " + to_string(got));
    }
  }
  if (out.pass) out.detail = "100 decided pairs, 6 ties LET at tolerances 1..12";
  return out;
}

template <Space A, Space B>
std::size_t count_mismatches(const RefinementMap<A, B>& f, const RefinementMap<A, B>& g,
                             const std::vector<DotOf<A>>& dots) {
  std::size_t bad = 0;
  for (const auto& a : dots) bad += f(a) == g(a) ? 0 : 1;
  return bad;
}

Outcome morphism_laws() {
  Outcome out;
  const SigmaR sigma;
  auto lean = sigma_r_dots(5, 1);
  lean.push_back(LeanDyadicDot::maximal());
  const std::vector<RefinementMap<SigmaR, SigmaR>> endo = {identity_map(sigma), neg_map(), widen_map()};
  std::size_t triples = 0;
  for (const auto& f : endo) {
    for (const auto& g : endo) {
      for (const auto& h : endo) {
        if (count_mismatches(compose(compose(f, g), h), compose(f, compose(g, h)), lean) != 0) {
          out.fail("associativity fails for " + h.name() + "." + g.name() + "." + f.name());
        }
        ++triples;
      }
    }
    if (count_mismatches(compose(identity_map(sigma), f), f, lean) != 0 ||
        count_mismatches(compose(f, identity_map(sigma)), f, lean) != 0) {
      out.fail("identity law fails for " + f.name());
    }
  }

  const auto binary = NArySpace::line(2);
  auto bdots = nary_unit_dots(2, 5);
  bdots.push_back(binary.maximal());
  const auto e = embed_binary();
  for (const auto& g : endo) {
    for (const auto& h : endo) {
      if (count_mismatches(compose(compose(e, g), h), compose(e, compose(g, h)), bdots) != 0) {
        out.fail("associativity fails for " + h.name() + "." + g.name() + ".embed_binary");
      }
      ++triples;
    }
  }
  if (count_mismatches(compose(identity_map(binary), e), e, bdots) != 0 ||
      count_mismatches(compose(e, identity_map(sigma)), e, bdots) != 0) {
    out.fail("identity law fails for embed_binary");
  }
  const auto unit3 = NArySpace::unit(3);
  const auto unit2 = NArySpace::unit(2);
  const auto c = cantor_map();
  const auto tdots = nary_unit_dots(3, 5);
  if (count_mismatches(compose(identity_map(unit3), c), c, tdots) != 0 ||
      count_mismatches(compose(c, identity_map(unit2)), c, tdots) != 0 ||
      count_mismatches(compose(compose(c, identity_map(unit2)), identity_map(unit2)),
                       compose(c, compose(identity_map(unit2), identity_map(unit2))), tdots) != 0) {
    out.fail("laws fail for the Cantor map");
  }
  ++triples;

  RationalSource rng(31337);
  for (int i = 0; i < 50; ++i) {
    const int j = static_cast<int>(rng.integer(0, 12));
    const Rational q = Rational(rng.integer(-8L << j, 8L << j)) / pow2(j);
    try {
      const auto image = apply_map(e, from_nary(binary, q));
      if (auto w = points_apart_within(sigma, image, from_rational(q), 32)) {
        out.fail("embed_binary of " + to_string(q) + " apart at index " + std::to_string(w->index));
      }
    } catch (const Error& ex) {
      out.fail("embed_binary of " + to_string(q) + ": " + ex.what());
    }
  }
  if (out.pass) out.detail = std::to_string(triples) + " triples, identity laws, 50 dyadic embeddings";
  return out;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 means no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "axiom-suite", 60, axiom_suite},
      {2, "exact-arithmetic", 30, exact_arithmetic},
      {3, "trail-conversion", 0, trail_conversion},
      {4, "cantor-function", 0, cantor_function},
      {5, "unglueing", 0, unglueing},
      {6, "metric-fann", 30, metric_fann},
      {7, "hawkeye", 0, hawkeye},
      {8, "morphism-laws", 0, morphism_laws},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome result;
    try {
      result = c.run();
    } catch (const std::exception& e) {
      result.fail(std::string("uncaught: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      result.fail("took " + std::to_string(seconds) + " s");
    }
    char timing[64];
    if (c.limit_seconds > 0) {
      std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", seconds, c.limit_seconds);
    } else {
      std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    }
    std::printf("%s %d %s (%s): %s\n", result.pass ? "PASS" : "FAIL", c.id, c.name, timing,
                result.detail.c_str());
    std::fflush(stdout);
    failures += result.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
