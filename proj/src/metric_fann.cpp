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

#include "ntop/metric_fann.hpp"

#include <map>
#include <sstream>
#include <utility>

#include "ntop/errors.hpp"

namespace ntop {

MetricPresentation::MetricPresentation(std::string name, std::vector<std::vector<std::string>> labels,
                                       Oracle dist, std::optional<Values> values)
    : name_(std::move(name)), labels_(std::move(labels)), dist_(std::move(dist)), values_(std::move(values)) {
  if (labels_.empty()) throw InvalidPresentation("presentation has no levels");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw InvalidPresentation("level " + std::to_string(i) + " has no centers");
    if (values_ && (*values_).at(i).size() != labels_[i].size()) {
      throw InvalidPresentation("level " + std::to_string(i) + ": value count differs from label count");
    }
  }
}

const Rational& MetricPresentation::value(const Center& c) const {
  if (!values_) throw PreconditionError("presentation '" + name_ + "' has no center values");
  return values_->at(c.level).at(c.index);
}

MetricPresentation abs_rational_presentation(std::string name, MetricPresentation::Values centers) {
  std::vector<std::vector<std::string>> labels;
  for (const auto& level : centers) {
    auto& out = labels.emplace_back();
    for (const auto& x : level) out.push_back(to_string(x));
  }
  auto shared = std::make_shared<const MetricPresentation::Values>(centers);
  auto oracle = [shared](const Center& a, const Center& b, int) {
    return Rational(abs((*shared)[a.level][a.index] - (*shared)[b.level][b.index]));
  };
  return {std::move(name), std::move(labels), std::move(oracle), std::move(centers)};
}

namespace {

void check_builtin_level(int max_level) {
  if (max_level < 0 || max_level > kMaxBuiltinLevel) {
    throw PreconditionError("max level must lie in [0, " + std::to_string(kMaxBuiltinLevel) + "]");
  }
}

}  // namespace

MetricPresentation unit_interval_presentation(int max_level) {
  check_builtin_level(max_level);
  MetricPresentation::Values centers;
  for (int i = 0; i <= max_level; ++i) {
    auto& level = centers.emplace_back();
    const Rational step = pow2(-i - 2);
    for (long j = 0; j <= (1L << (i + 2)); ++j) level.push_back(step * j);
  }
  return abs_rational_presentation("unit-interval", std::move(centers));
}

MetricPresentation cantor_presentation(int max_level) {
  check_builtin_level(max_level);
  MetricPresentation::Values centers;
  for (int i = 0; i <= max_level; ++i) {
    int k = 0;
    while (!(Rational(1, ipow(3, k)) < pow2(-i - 2))) ++k;
    // Left endpoint of the stage-k interval with binary address w is
    // sum over bits of w of 2 * 3^-(position).
    auto& level = centers.emplace_back();
    for (long w = 0; w < (1L << k); ++w) {
      Rational x = 0;
      for (int pos = 1; pos <= k; ++pos) {
        if ((w >> (k - pos)) & 1) x += Rational(2, ipow(3, pos));
      }
      x.canonicalize();
      level.push_back(x);
    }
  }
  return abs_rational_presentation("cantor", std::move(centers));
}

MetricPresentation point_presentation(int max_level) {
  check_builtin_level(max_level);
  MetricPresentation::Values centers(static_cast<std::size_t>(max_level) + 1, {Rational(0)});
  std::vector<std::vector<std::string>> labels(centers.size(), {"x0"});
  return {"point", std::move(labels), [](const Center&, const Center&, int) { return Rational(0); },
          std::move(centers)};
}

std::vector<std::string> builtin_presentation_names() { return {"unit-interval", "cantor", "point"}; }

std::optional<MetricPresentation> builtin_presentation(std::string_view name, int max_level) {
  if (name == "unit-interval") return unit_interval_presentation(max_level);
  if (name == "cantor") return cantor_presentation(max_level);
  if (name == "point") return point_presentation(max_level);
  return std::nullopt;
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

}  // namespace

MetricPresentation parse_presentation(std::string_view text, std::string name) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  {
    std::istringstream in{std::string(text)};
    std::size_t number = 0;
    for (std::string line; std::getline(in, line);) {
      ++number;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (tokens(line).empty()) continue;
      lines.emplace_back(number, line);
    }
  }
  auto fail = [](std::size_t line, const std::string& msg) -> ParseError {
    return ParseError("presentation line " + std::to_string(line) + ": " + msg);
  };
  std::size_t pos = 0;
  if (lines.empty()) throw ParseError("presentation: empty input");
  auto header = tokens(lines[pos].second);
  if (header.size() != 1 || header[0].rfind("levels=", 0) != 0) {
    throw fail(lines[pos].first, "expected 'levels=L'");
  }
  std::size_t level_count = 0;
  try {
    const std::string count = header[0].substr(7);
    std::size_t used = 0;
    level_count = std::stoul(count, &used);
    if (used != count.size() || level_count == 0) throw std::invalid_argument("bad");
  } catch (const std::exception&) {
    throw fail(lines[pos].first, "level count must be a positive integer");
  }
  ++pos;
  std::vector<std::vector<std::string>> labels;
  for (std::size_t i = 0; i < level_count; ++i, ++pos) {
    if (pos >= lines.size()) throw ParseError("presentation: expected " + std::to_string(level_count) + " label lines");
    labels.push_back(tokens(lines[pos].second));
  }
  if (pos >= lines.size()) throw ParseError("presentation: missing 'distance=' line");
  const auto kind = tokens(lines[pos].second);
  const std::size_t kind_line = lines[pos].first;
  ++pos;
  if (kind.size() == 1 && kind[0] == "distance=abs-rational") {
    if (pos != lines.size()) throw fail(lines[pos].first, "unexpected content after distance=abs-rational");
    MetricPresentation::Values values;
    for (const auto& level : labels) {
      auto& out = values.emplace_back();
      for (const auto& l : level) out.push_back(parse_rational(l));
    }
    auto shared = std::make_shared<const MetricPresentation::Values>(values);
    auto oracle = [shared](const Center& a, const Center& b, int) {
      return Rational(abs((*shared)[a.level][a.index] - (*shared)[b.level][b.index]));
    };
    return {std::move(name), std::move(labels), std::move(oracle), std::move(values)};
  }
  if (!(kind.size() == 1 && kind[0] == "distance=table")) {
    throw fail(kind_line, "expected 'distance=abs-rational' or 'distance=table'");
  }
  std::map<std::pair<std::string, std::string>, Rational> table;
  for (; pos < lines.size(); ++pos) {
    auto t = tokens(lines[pos].second);
    if (t.size() != 3) throw fail(lines[pos].first, "expected 'a b p/q'");
    const Rational d = parse_rational(t[2]);
    if (d < 0) throw fail(lines[pos].first, "negative distance");
    if (t[0] == t[1]) {
      if (d != 0) throw fail(lines[pos].first, "nonzero self-distance");
      continue;
    }
    auto key = std::minmax(t[0], t[1]);
    auto [it, fresh] = table.emplace(std::pair(key.first, key.second), d);
    if (!fresh && it->second != d) throw fail(lines[pos].first, "conflicting distance for this pair");
  }
  std::vector<std::string> all;
  for (const auto& level : labels) all.insert(all.end(), level.begin(), level.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (!table.count({all[i], all[j]})) {
        throw InvalidPresentation("distance table lacks the pair " + all[i] + " " + all[j]);
      }
    }
  }
  auto shared_table = std::make_shared<const decltype(table)>(std::move(table));
  auto shared_labels = std::make_shared<const std::vector<std::vector<std::string>>>(labels);
  auto oracle = [shared_table, shared_labels](const Center& a, const Center& b, int) {
    const auto& la = (*shared_labels)[a.level][a.index];
    const auto& lb = (*shared_labels)[b.level][b.index];
    if (la == lb) return Rational(0);
    auto key = std::minmax(la, lb);
    return shared_table->at({key.first, key.second});
  };
  return {std::move(name), std::move(labels), std::move(oracle)};
}

void check_net_condition(const MetricPresentation& pres, int max_level) {
  if (max_level < 0) throw PreconditionError("max level must be non-negative");
  if (static_cast<std::size_t>(max_level) >= pres.level_count()) {
    throw InvalidPresentation("presentation has " + std::to_string(pres.level_count()) +
                              " levels, max level " + std::to_string(max_level) + " requested");
  }
  for (int i = 0; i < max_level; ++i) {
    const int prec = i + 6;
    const Rational bound = pow2(-i - 2);
    const Rational slack = pow2(-prec);
    const auto fine = static_cast<std::size_t>(i) + 1;
    for (std::size_t c = 0; c < pres.level_size(fine); ++c) {
      bool covered = false;
      for (std::size_t b = 0; b < pres.level_size(static_cast<std::size_t>(i)) && !covered; ++b) {
        covered = pres.dist({fine, c}, {static_cast<std::size_t>(i), b}, prec) + slack < bound;
      }
      if (!covered) {
        throw InvalidPresentation("net condition fails at level " + std::to_string(fine) + ": center '" +
                                  pres.label({fine, c}) + "' is not within 2^-" + std::to_string(i + 2) +
                                  " of any level-" + std::to_string(i) + " center");
      }
    }
  }
}

int h_choice(const MetricPresentation& pres, const Center& a, const Center& b) {
  if (a.level <= b.level) throw PreconditionError("h_choice: first center must be on a deeper level");
  const long s = static_cast<long>(a.level);
  const long t = static_cast<long>(b.level);
  const Rational q = pres.dist(a, b, static_cast<int>(2 * s + 2));
  return q < pow2(-t) - pow2(-s) - pow2(-2 * s - 1) ? 0 : 1;
}

int g_choice(const MetricPresentation& pres, const Center& a, const Center& b) {
  const long s = static_cast<long>(a.level);
  const long t = static_cast<long>(b.level);
  const Rational q = pres.dist(a, b, static_cast<int>(s + t + 3));
  return q > pow2(-s) + pow2(-t) + 3 * pow2(-s - t - 2) ? 1 : 0;
}

std::string to_string(const BallDot& a) {
  if (a.top) return "TOP";
  return "B(" + std::to_string(a.level) + "," + std::to_string(a.index) + ")";
}

std::size_t Fann::id(const Dot& a) const {
  if (a.top) return 0;
  if (a.level > data_->max_level || a.index >= data_->pres.level_size(a.level)) {
    throw PreconditionError("dot " + to_string(a) + " is not in the fann");
  }
  return data_->level_offset[a.level] + a.index;
}

bool Fann::apart(const Dot& a, const Dot& b) const { return data_->apart[id(a)][id(b)]; }

bool Fann::refines(const Dot& a, const Dot& b) const { return data_->ancestor[id(a)][id(b)]; }

std::vector<BallDot> Fann::parents(const Dot& a) const {
  std::vector<Dot> out;
  for (auto p : data_->parents[id(a)]) out.push_back(data_->dots[p]);
  return out;
}

std::vector<BallDot> Fann::successors(const Dot& a) const {
  std::vector<Dot> out;
  for (auto c : data_->children[id(a)]) out.push_back(data_->dots[c]);
  return out;
}

std::string Fann::name() const { return "fann:" + data_->pres.name(); }

Fann build_fann(const MetricPresentation& pres, int max_level) {
  check_net_condition(pres, max_level);
  auto data = std::make_shared<Fann::Data>(Fann::Data{pres, static_cast<std::size_t>(max_level), {}, {}, {}, {}, {}, {}});
  auto& d = *data;
  d.dots.push_back(BallDot::maximal());
  for (std::size_t i = 0; i <= d.max_level; ++i) {
    d.level_offset.push_back(d.dots.size());
    for (std::size_t j = 0; j < pres.level_size(i); ++j) d.dots.push_back(BallDot::at(i, j));
  }
  const std::size_t n = d.dots.size();
  d.parents.assign(n, {});
  d.children.assign(n, {});
  for (std::size_t a = 1; a < n; ++a) {
    const BallDot& da = d.dots[a];
    if (da.level == 0) {
      d.parents[a].push_back(0);
    } else {
      const std::size_t up = da.level - 1;
      for (std::size_t j = 0; j < pres.level_size(up); ++j) {
        if (h_choice(pres, {da.level, da.index}, {up, j}) == 0) d.parents[a].push_back(d.level_offset[up] + j);
      }
      if (d.parents[a].empty()) {
        throw InvalidPresentation("orphan dot at level " + std::to_string(da.level) + ": center '" +
                                  pres.label({da.level, da.index}) + "' refines no level-" +
                                  std::to_string(up) + " ball");
      }
    }
    for (auto p : d.parents[a]) d.children[p].push_back(a);
  }
  // dots are ordered by level, so parents come first
  d.ancestor.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    d.ancestor[a][a] = true;
    for (auto p : d.parents[a]) {
      for (std::size_t b = 0; b < n; ++b) {
        if (d.ancestor[p][b]) d.ancestor[a][b] = true;
      }
    }
  }
  d.apart.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 1; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const BallDot& da = d.dots[a];
      const BallDot& db = d.dots[b];
      if (g_choice(pres, {da.level, da.index}, {db.level, db.index}) == 0) continue;
      if (d.ancestor[a][b] || d.ancestor[b][a]) {
        throw InvalidPresentation("apartness conflict: " + to_string(da) + " and " + to_string(db) +
                                  " are apart yet connected by refinement");
      }
      d.apart[a][b] = d.apart[b][a] = true;
    }
  }
  return Fann(std::move(data));
}

GradedFragment<Fann> fann_fragment(const Fann& fann) { return GradedFragment<Fann>::build(fann, fann.dots()); }

Rational fann_point_value(const Fann& fann, const Point<BallDot>& p, std::size_t k) {
  const BallDot& a = p[k];
  if (a.top) throw PreconditionError("fann_point_value: dot at index " + std::to_string(k) + " is TOP");
  return fann.presentation().value({a.level, a.index});
}

Point<BallDot> greedy_chain(const Fann& fann, const Rational& x) {
  if (!fann.presentation().has_values()) throw PreconditionError("greedy_chain: presentation has no center values");
  struct Cursor {
    std::size_t level = 0;
    std::optional<BallDot> last;
  };
  return Point<BallDot>([fann, x, cur = Cursor{}]() mutable {
    if (cur.level > fann.max_level()) {
      throw DepthExhausted("greedy_chain: fann stops at level " + std::to_string(fann.max_level()));
    }
    const auto& pres = fann.presentation();
    std::vector<BallDot> options =
        cur.last ? fann.successors(*cur.last) : fann.successors(BallDot::maximal());
    if (options.empty()) throw DepthExhausted("greedy_chain: " + to_string(*cur.last) + " has no successor");
    BallDot best = options.front();
    Rational best_d = abs(pres.value({best.level, best.index}) - x);
    for (const auto& o : options) {
      Rational dd = abs(pres.value({o.level, o.index}) - x);
      if (dd < best_d) {
        best = o;
        best_d = dd;
      }
    }
    cur.last = best;
    ++cur.level;
    return best;
  });
}

}  // namespace ntop
