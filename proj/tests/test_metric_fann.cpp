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

#include <gtest/gtest.h>

#include "ntop/axioms.hpp"
#include "ntop/errors.hpp"
#include "ntop/metric_fann.hpp"
#include "test_support.hpp"

namespace ntop {
namespace {

/// Index of a rational center on a level, or throws.
Center find_center(const MetricPresentation& pres, std::size_t level, const Rational& x) {
  for (std::size_t i = 0; i < pres.level_size(level); ++i) {
    if (pres.value({level, i}) == x) return {level, i};
  }
  throw std::runtime_error("no center " + to_string(x));
}

TEST(Choices, HExamples) {
  const auto pres = unit_interval_presentation(3);
  // 0 at level 3, 1/8 at level 1: 1/8 < 1/2 - 1/8 - 1/128
  EXPECT_EQ(h_choice(pres, find_center(pres, 3, 0), find_center(pres, 1, Rational(1, 8))), 0);
  EXPECT_EQ(h_choice(pres, find_center(pres, 2, Rational(1, 2)), find_center(pres, 1, Rational(1, 2))), 0);
  EXPECT_EQ(h_choice(pres, find_center(pres, 2, 0), find_center(pres, 1, 1)), 1);
  EXPECT_THROW(h_choice(pres, {1, 0}, {1, 1}), PreconditionError);
}

TEST(Choices, GExamples) {
  const auto pres = unit_interval_presentation(3);
  EXPECT_EQ(g_choice(pres, find_center(pres, 3, 0), find_center(pres, 3, 1)), 1);
  EXPECT_EQ(g_choice(pres, find_center(pres, 2, 0), find_center(pres, 2, 0)), 0);
  EXPECT_EQ(g_choice(pres, find_center(pres, 2, 0), find_center(pres, 2, Rational(1, 4))), 0);
}

TEST(Choices, DecisionsCertifyThePaperDisjunctions) {
  const auto pres = unit_interval_presentation(5);
  for (std::size_t s = 0; s <= 5; ++s) {
    for (std::size_t t = 0; t <= 5; ++t) {
      for (std::size_t i = 0; i < pres.level_size(s); ++i) {
        for (std::size_t j = 0; j < pres.level_size(t); ++j) {
          const Center a{s, i}, b{t, j};
          const Rational d = abs(pres.value(a) - pres.value(b));
          const long ls = static_cast<long>(s), lt = static_cast<long>(t);
          const int g = g_choice(pres, a, b);
          if (g == 1) ASSERT_GT(d, pow2(-ls) + pow2(-lt) + pow2(-ls - lt - 1));
          if (g == 0) ASSERT_LT(d, pow2(-ls) + pow2(-lt) + pow2(-ls - lt));
          if (s > t) {
            const int h = h_choice(pres, a, b);
            if (h == 0) ASSERT_LT(d, pow2(-lt) - pow2(-ls));
            if (h == 1) ASSERT_GT(d, pow2(-lt) - pow2(-ls) - pow2(-2 * ls));
          }
        }
      }
    }
  }
}

TEST(Choices, InexactOracleStaysSafe) {
  // every answer off by almost 2^-prec, alternating sign
  const auto exact = unit_interval_presentation(4);
  std::vector<std::vector<std::string>> labels;
  for (std::size_t l = 0; l < exact.level_count(); ++l) {
    auto& row = labels.emplace_back();
    for (std::size_t i = 0; i < exact.level_size(l); ++i) row.push_back(exact.label({l, i}));
  }
  const MetricPresentation noisy("noisy", labels, [exact](const Center& a, const Center& b, int prec) {
    const Rational d = abs(exact.value(a) - exact.value(b));
    const Rational err = pow2(-prec) * Rational(99, 100);
    if ((a.index + b.index) % 2 == 0) return Rational(d + err);
    return d > err ? Rational(d - err) : Rational(0);
  });
  for (std::size_t s = 0; s <= 4; ++s) {
    for (std::size_t t = 0; t < s; ++t) {
      for (std::size_t i = 0; i < exact.level_size(s); ++i) {
        for (std::size_t j = 0; j < exact.level_size(t); ++j) {
          const Rational d = abs(exact.value({s, i}) - exact.value({t, j}));
          const long ls = static_cast<long>(s), lt = static_cast<long>(t);
          // re-query at precision 4s: exact here
          if (h_choice(noisy, {s, i}, {t, j}) == 0) ASSERT_LT(d, pow2(-lt) - pow2(-ls));
          if (g_choice(noisy, {s, i}, {t, j}) == 1) ASSERT_GT(d, pow2(-ls) + pow2(-lt) + pow2(-ls - lt - 1));
        }
      }
    }
  }
}

TEST(Presentations, Builtins) {
  const auto unit = unit_interval_presentation(2);
  EXPECT_EQ(unit.level_count(), 3u);
  EXPECT_EQ(unit.level_size(2), 17u);
  EXPECT_EQ(unit.label({1, 3}), "3/8");
  const auto cantor = cantor_presentation(3);
  EXPECT_EQ(cantor.level_size(0), 4u);   // stage 2: 1/9 < 1/4
  EXPECT_EQ(cantor.level_size(3), 16u);  // stage 4: 1/81 < 1/32 <= 1/27
  EXPECT_EQ(cantor.value({0, 3}), Rational(8, 9));
  EXPECT_EQ(point_presentation(4).level_size(4), 1u);
  EXPECT_FALSE(builtin_presentation("nope", 3).has_value());
  EXPECT_THROW(unit_interval_presentation(kMaxBuiltinLevel + 1), PreconditionError);
}

TEST(Presentations, ParseTableAndAbsRational) {
  const auto abs_pres = parse_presentation("levels=2\n# nets\n0 1\n0 1/4 1/2 3/4 1\ndistance=abs-rational\n", "f");
  EXPECT_EQ(abs_pres.level_size(1), 5u);
  EXPECT_EQ(abs_pres.dist({0, 1}, {1, 1}, 10), Rational(3, 4));

  const auto table = parse_presentation(
      "levels=2\nx y\nx y z\ndistance=table\nx y 1\nx z 1/8\ny z 7/8\n", "t");
  EXPECT_EQ(table.dist({0, 0}, {1, 2}, 5), Rational(1, 8));
  EXPECT_EQ(table.dist({1, 2}, {0, 0}, 5), Rational(1, 8));
  EXPECT_EQ(table.dist({0, 1}, {1, 1}, 5), Rational(0));
  EXPECT_FALSE(table.has_values());

  EXPECT_THROW(parse_presentation("", "e"), ParseError);
  EXPECT_THROW(parse_presentation("levels=x\n", "e"), ParseError);
  EXPECT_THROW(parse_presentation("levels=1\n0 1\n", "e"), ParseError);
  EXPECT_THROW(parse_presentation("levels=1\n0 1\ndistance=euclid\n", "e"), ParseError);
  EXPECT_THROW(parse_presentation("levels=1\nx y z\ndistance=table\nx y 1\n", "e"), InvalidPresentation);
  EXPECT_THROW(parse_presentation("levels=1\nx y\ndistance=table\nx y 1\ny x 2\n", "e"), ParseError);
}

TEST(NetCondition, NamesTheFailingLevel) {
  const auto bad = parse_presentation("levels=3\n0 1/4 1/2 3/4 1\n0 1/4 1/2 3/4 1\n0 3/8 1\ndistance=abs-rational\n", "b");
  EXPECT_NO_THROW(check_net_condition(bad, 1));
  try {
    check_net_condition(bad, 2);
    FAIL();
  } catch (const InvalidPresentation& e) {
    EXPECT_NE(std::string(e.what()).find("level 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(check_net_condition(bad, 3), InvalidPresentation);
}

TEST(BuildFann, UnitIntervalIsAFann) {
  const auto fann = build_fann(unit_interval_presentation(6), 6);
  const auto fragment = fann_fragment(fann);
  EXPECT_TRUE(is_fann_fragment(fragment));
  EXPECT_TRUE(fragment.grading_holds());
  std::size_t widest = 0;
  for (const auto& a : fann.dots()) {
    if (!a.top && a.level > 0) EXPECT_FALSE(fann.parents(a).empty());
    if (!a.top && a.level < 6) widest = std::max(widest, fann.successors(a).size());
  }
  EXPECT_LE(widest, 7u);
  EXPECT_TRUE(check_axioms(fann, fann.dots()).all_passed());
}

TEST(BuildFann, ApartBallsHaveExactGaps) {
  const auto fann = build_fann(unit_interval_presentation(5), 5);
  const auto& pres = fann.presentation();
  std::size_t apart = 0;
  for (const auto& a : fann.dots()) {
    for (const auto& b : fann.dots()) {
      if (a.top || b.top || !fann.apart(a, b)) continue;
      ++apart;
      const Rational gap = abs(pres.value({a.level, a.index}) - pres.value({b.level, b.index})) -
                           pow2(-static_cast<long>(a.level)) - pow2(-static_cast<long>(b.level));
      ASSERT_GT(gap, 0);
    }
  }
  EXPECT_GT(apart, 0u);
}

TEST(BuildFann, CantorSetBallsSeparate) {
  const auto fann = build_fann(cantor_presentation(5), 5);
  EXPECT_TRUE(fann_fragment(fann).grading_holds());
  EXPECT_TRUE(check_axioms(fann, fann.dots()).all_passed());
  const auto& pres = fann.presentation();
  const BallDot left = BallDot::at(2, 0);
  const BallDot right = BallDot::at(2, pres.level_size(2) - 1);
  EXPECT_EQ(pres.value({2, 0}), 0);
  EXPECT_EQ(pres.value({2, pres.level_size(2) - 1}), Rational(26, 27));
  EXPECT_TRUE(fann.apart(left, right));
  // radius 1/2 balls at level 1 cannot be apart inside a diameter-1 space
  EXPECT_FALSE(fann.apart(BallDot::at(1, 0), BallDot::at(1, pres.level_size(1) - 1)));
}

TEST(BuildFann, SinglePointIsAChain) {
  const auto fann = build_fann(point_presentation(5), 5);
  for (const auto& a : fann.dots()) {
    if (a.top || a.level < 5) EXPECT_EQ(fann.successors(a).size(), 1u);
    for (const auto& b : fann.dots()) EXPECT_FALSE(fann.apart(a, b));
  }
  const auto chain = greedy_chain(fann, Rational(17));
  for (std::size_t k = 0; k <= 5; ++k) EXPECT_EQ(fann_point_value(fann, chain, k), 0);
  EXPECT_THROW(chain[6], DepthExhausted);
}

TEST(BuildFann, InvalidPresentationsAbort) {
  // a table violating the triangle inequality: z refines x through y, yet z and x are far apart
  const auto skewed = parse_presentation("levels=3\nx\ny\nz\ndistance=table\nx y 0\ny z 0\nx z 2\n", "s");
  EXPECT_NO_THROW(build_fann(skewed, 1));
  try {
    build_fann(skewed, 2);
    FAIL();
  } catch (const InvalidPresentation& e) {
    EXPECT_NE(std::string(e.what()).find("conflict"), std::string::npos) << e.what();
  }
  const auto sparse = parse_presentation("levels=2\n0 1\n0 1/2 1\ndistance=abs-rational\n", "n");
  EXPECT_THROW(build_fann(sparse, 1), InvalidPresentation);
  EXPECT_THROW(build_fann(sparse, 2), InvalidPresentation);
}

TEST(FannPoints, GreedyChainsTrackRationals) {
  const auto fann = build_fann(unit_interval_presentation(6), 6);
  testing::RationalSource source(9);
  for (int i = 0; i < 20; ++i) {
    const Rational x = source.in(0, 1);
    const auto chain = greedy_chain(fann, x);
    ASSERT_TRUE(point_prefix_valid(fann, chain, 7));
    for (std::size_t k = 0; k <= 6; ++k) {
      const Rational value = fann_point_value(fann, chain, k);
      ASSERT_LE(abs(value - x), pow2(2 - static_cast<long>(k)));
      ASSERT_LE(abs(value - x), pow2(-static_cast<long>(k) - 2) + pow2(-static_cast<long>(k)));
    }
  }
  const auto half = greedy_chain(fann, Rational(1, 2));
  for (std::size_t k = 0; k <= 6; ++k) EXPECT_EQ(fann_point_value(fann, half, k), Rational(1, 2));
  const auto third = greedy_chain(fann, Rational(1, 3));
  for (std::size_t k = 0; k <= 6; ++k) {
    const Rational err = abs(fann_point_value(fann, third, k) - Rational(1, 3));
    EXPECT_LE(err, pow2(-static_cast<long>(k) - 2) + pow2(-static_cast<long>(k)));
  }
}

}  // namespace
}  // namespace ntop
