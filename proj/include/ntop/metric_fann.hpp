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

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ntop/fragment.hpp"
#include "ntop/point.hpp"
#include "ntop/rational.hpp"

namespace ntop {

/// A center c_{level,index} of the level-th finite net.
struct Center {
  std::size_t level = 0;
  std::size_t index = 0;

  auto operator<=>(const Center&) const = default;
};

/// Finite nets C_0, C_1, ... with a distance oracle. dist(a, b, prec) must be
/// within 2^-prec of the true distance. When the centers are rationals in a
/// line, `value` gives them exactly.
class MetricPresentation {
 public:
  using Oracle = std::function<Rational(const Center&, const Center&, int prec)>;
  using Values = std::vector<std::vector<Rational>>;

  MetricPresentation(std::string name, std::vector<std::vector<std::string>> labels, Oracle dist,
                     std::optional<Values> values = std::nullopt);

  const std::string& name() const { return name_; }
  std::size_t level_count() const { return labels_.size(); }
  std::size_t level_size(std::size_t level) const { return labels_.at(level).size(); }
  const std::string& label(const Center& c) const { return labels_.at(c.level).at(c.index); }
  Rational dist(const Center& a, const Center& b, int prec) const { return dist_(a, b, prec); }
  bool has_values() const { return values_.has_value(); }
  /// Throws PreconditionError without values.
  const Rational& value(const Center& c) const;

 private:
  std::string name_;
  std::vector<std::vector<std::string>> labels_;
  Oracle dist_;
  std::optional<Values> values_;
};

/// Rational centers with d(x, y) = |x - y|, computed exactly.
MetricPresentation abs_rational_presentation(std::string name, MetricPresentation::Values centers);

/// [0,1] with C_i = { j 2^(-i-2) : 0 <= j <= 2^(i+2) }, levels 0..max_level.
MetricPresentation unit_interval_presentation(int max_level);
/// Cantor set; level i holds the left endpoints of the stage-k intervals,
/// k least with 3^-k < 2^(-i-2).
MetricPresentation cantor_presentation(int max_level);
/// One point x0 = 0 at every level, d = 0.
MetricPresentation point_presentation(int max_level);

inline constexpr int kMaxBuiltinLevel = 8;

/// "unit-interval", "cantor", "point".
std::vector<std::string> builtin_presentation_names();
std::optional<MetricPresentation> builtin_presentation(std::string_view name, int max_level);

/// Text format:
///   levels=L
///   <labels of level 0, whitespace separated>
///   ... (L label lines)
///   distance=abs-rational        labels are rationals, d = |x - y|
/// or
///   distance=table
///   a b p/q                      one line per unordered pair of distinct labels
/// '#' starts a comment. Throws ParseError or InvalidPresentation.
MetricPresentation parse_presentation(std::string_view text, std::string name);

/// Checks, on the centers, that every level-(i+1) center is within
/// 2^(-i-2) of some level-i center, for i < max_level. Throws
/// InvalidPresentation naming the failing level.
void check_net_condition(const MetricPresentation& pres, int max_level);

/// a at level s > t = b.level. 0 certifies d < 2^-t - 2^-s.
int h_choice(const MetricPresentation& pres, const Center& a, const Center& b);
/// 1 certifies d > 2^-s + 2^-t + 2^(-s-t-1), i.e. the balls are apart.
int g_choice(const MetricPresentation& pres, const Center& a, const Center& b);

/// TOP or the ball B(c_{level,index}, 2^-level).
struct BallDot {
  bool top = true;
  std::size_t level = 0;
  std::size_t index = 0;

  static constexpr BallDot maximal() { return {}; }
  static constexpr BallDot at(std::size_t level, std::size_t index) { return {false, level, index}; }

  auto operator<=>(const BallDot&) const = default;
};

/// "TOP" or "B(level,index)".
std::string to_string(const BallDot& a);

/// The fann built from a presentation up to a fixed level. Grade is level+1,
/// TOP has grade 0. Copies share the immutable tables.
class Fann {
 public:
  using Dot = BallDot;

  bool apart(const Dot& a, const Dot& b) const;
  bool refines(const Dot& a, const Dot& b) const;
  Dot maximal() const { return BallDot::maximal(); }
  std::size_t grade(const Dot& a) const { return a.top ? 0 : a.level + 1; }
  std::vector<Dot> parents(const Dot& a) const;
  std::vector<Dot> successors(const Dot& a) const;
  std::string name() const;

  const MetricPresentation& presentation() const { return data_->pres; }
  std::size_t max_level() const { return data_->max_level; }
  /// TOP first, then by level and index.
  const std::vector<Dot>& dots() const { return data_->dots; }

 private:
  friend Fann build_fann(const MetricPresentation& pres, int max_level);

  struct Data {
    MetricPresentation pres;
    std::size_t max_level = 0;
    std::vector<Dot> dots;
    std::vector<std::size_t> level_offset;  // global index of (level, 0), TOP is 0
    std::vector<std::vector<std::size_t>> parents;
    std::vector<std::vector<std::size_t>> children;
    std::vector<std::vector<bool>> ancestor;  // ancestor[a][b]: a refines b
    std::vector<std::vector<bool>> apart;
  };

  explicit Fann(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::size_t id(const Dot& a) const;

  std::shared_ptr<const Data> data_;
};

/// Runs the net check, generates refinement between consecutive levels by h,
/// closes it transitively and tabulates g. Orphans and apartness across a
/// refinement chain raise InvalidPresentation.
Fann build_fann(const MetricPresentation& pres, int max_level);

GradedFragment<Fann> fann_fragment(const Fann& fann);

/// Center of p[k]. TOP at index k is a precondition failure.
Rational fann_point_value(const Fann& fann, const Point<BallDot>& p, std::size_t k);

/// Level-k ball at index k: starts from the level-0 ball nearest x and keeps
/// the successor whose center is nearest x (lowest index on ties). Requires
/// center values. Pulling past max_level raises DepthExhausted.
Point<BallDot> greedy_chain(const Fann& fann, const Rational& x);

}  // namespace ntop
