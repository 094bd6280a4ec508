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

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ntop/errors.hpp"
#include "ntop/space.hpp"

namespace ntop {

/// A finite strictly descending dot sequence a_0 > a_1 > ... > a_s. The
/// empty trail is the maximal dot of a trail space.
template <class Dot>
struct Trail {
  std::vector<Dot> dots;

  bool empty() const { return dots.empty(); }
  std::size_t size() const { return dots.size(); }
  const Dot& last() const { return dots.back(); }

  auto operator<=>(const Trail&) const = default;
};

template <class Dot>
std::string to_string(const Trail<Dot>& t) {
  std::string out = "<";
  for (std::size_t i = 0; i < t.dots.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(t.dots[i]);
  }
  return out + ">";
}

struct TrailRelations {
  bool apart;
  bool refines;

  bool operator==(const TrailRelations&) const = default;
};

/// refines(t1, t2): t1 extends t2. apart: the final dots are apart; the
/// empty trail touches every trail.
template <Space S>
TrailRelations trail_relations(const S& space, const Trail<DotOf<S>>& t1,
                               const Trail<DotOf<S>>& t2) {
  const bool extends = t2.size() <= t1.size() &&
                       std::equal(t2.dots.begin(), t2.dots.end(), t1.dots.begin());
  const bool apart = !t1.empty() && !t2.empty() && space.apart(t1.last(), t2.last());
  return {apart, extends};
}

/// A finite, predecessor-closed set of dots of a graded space with the
/// immediate-predecessor and successor maps materialized. Immutable once
/// built.
template <GradedSpace S>
class GradedFragment {
 public:
  using Dot = DotOf<S>;

  /// Throws PreconditionError if the dots are not closed under the space's
  /// immediate predecessors or do not contain the maximal dot.
  static GradedFragment build(S space, std::vector<Dot> dots) {
    GradedFragment f(std::move(space));
    std::sort(dots.begin(), dots.end(), [&](const Dot& a, const Dot& b) {
      const auto ga = f.space_.grade(a);
      const auto gb = f.space_.grade(b);
      return ga != gb ? ga < gb : a < b;
    });
    dots.erase(std::unique(dots.begin(), dots.end()), dots.end());
    f.dots_ = std::move(dots);
    for (std::size_t i = 0; i < f.dots_.size(); ++i) f.index_.emplace(f.dots_[i], i);
    if (!f.index_of(f.space_.maximal())) {
      throw PreconditionError("fragment does not contain the maximal dot");
    }
    f.parents_.resize(f.dots_.size());
    f.children_.resize(f.dots_.size());
    f.grades_.resize(f.dots_.size());
    for (std::size_t i = 0; i < f.dots_.size(); ++i) {
      f.grades_[i] = f.space_.grade(f.dots_[i]);
      for (const auto& p : f.space_.parents(f.dots_[i])) {
        auto j = f.index_of(p);
        if (!j) {
          throw PreconditionError("fragment not predecessor-closed: " + to_string(p) +
                                  " (parent of " + to_string(f.dots_[i]) + ") is missing");
        }
        f.parents_[i].push_back(*j);
        f.children_[*j].push_back(i);
      }
    }
    return f;
  }

  /// Adds all transitive predecessors of the seeds, then builds.
  static GradedFragment closure(S space, const std::vector<Dot>& seeds) {
    std::map<Dot, bool> seen;
    std::vector<Dot> work(seeds.begin(), seeds.end());
    work.push_back(space.maximal());
    std::vector<Dot> all;
    while (!work.empty()) {
      Dot d = std::move(work.back());
      work.pop_back();
      if (!seen.emplace(d, true).second) continue;
      for (auto& p : space.parents(d)) work.push_back(std::move(p));
      all.push_back(std::move(d));
    }
    return build(std::move(space), std::move(all));
  }

  const S& space() const { return space_; }
  std::size_t size() const { return dots_.size(); }
  const std::vector<Dot>& dots() const { return dots_; }
  const Dot& dot(std::size_t i) const { return dots_[i]; }
  std::size_t grade(std::size_t i) const { return grades_[i]; }
  std::span<const std::size_t> parents(std::size_t i) const { return parents_[i]; }
  std::span<const std::size_t> children(std::size_t i) const { return children_[i]; }

  std::optional<std::size_t> index_of(const Dot& a) const {
    auto it = index_.find(a);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const Dot& a) const { return index_.count(a) != 0; }

  /// Every immediate predecessor sits exactly one grade higher.
  bool grading_holds() const {
    for (std::size_t i = 0; i < dots_.size(); ++i) {
      if (parents_[i].empty() != (grades_[i] == 0)) return false;
      for (auto j : parents_[i]) {
        if (grades_[j] + 1 != grades_[i]) return false;
      }
    }
    return true;
  }

 private:
  explicit GradedFragment(S space) : space_(std::move(space)) {}

  S space_;
  std::vector<Dot> dots_;
  std::map<Dot, std::size_t> index_;
  std::vector<std::vector<std::size_t>> parents_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> grades_;
};

/// All successor trails from the maximal dot down to a. The maximal dot
/// itself is not part of a trail, so TOP has exactly one (empty) trail.
template <GradedSpace S>
std::vector<Trail<DotOf<S>>> succ_trails(const GradedFragment<S>& fragment, const DotOf<S>& a) {
  const auto start = fragment.index_of(a);
  if (!start) throw PreconditionError(to_string(a) + " is not in the fragment");
  std::vector<Trail<DotOf<S>>> out;
  std::vector<std::size_t> path;
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (fragment.parents(i).empty()) {
      Trail<DotOf<S>> t;
      for (auto it = path.rbegin(); it != path.rend(); ++it) t.dots.push_back(fragment.dot(*it));
      out.push_back(std::move(t));
      return;
    }
    path.push_back(i);
    for (auto j : fragment.parents(i)) self(self, j);
    path.pop_back();
  };
  walk(walk, *start);
  std::sort(out.begin(), out.end());
  return out;
}

/// The unglued space of a spraid: its dots are successor trails starting
/// at a grade-1 dot, ordered by extension and apart by final dots. It is a
/// tree with the trail length as grade.
template <GradedSpace S>
class UngluedSpace {
 public:
  using Dot = Trail<DotOf<S>>;

  explicit UngluedSpace(S base) : base_(std::move(base)) {}

  const S& base() const { return base_; }

  bool apart(const Dot& a, const Dot& b) const { return trail_relations(base_, a, b).apart; }
  bool refines(const Dot& a, const Dot& b) const { return trail_relations(base_, a, b).refines; }
  Dot maximal() const { return {}; }
  std::size_t grade(const Dot& a) const { return a.size(); }

  std::vector<Dot> parents(const Dot& a) const {
    if (a.empty()) return {};
    Dot p = a;
    p.dots.pop_back();
    return {p};
  }

  std::vector<Dot> successors(const Dot& a) const {
    std::vector<Dot> out;
    for (auto& s : base_.successors(a.empty() ? base_.maximal() : a.last())) {
      Dot t = a;
      t.dots.push_back(std::move(s));
      out.push_back(std::move(t));
    }
    return out;
  }

  std::string name() const { return "unglued:" + base_.name(); }

  bool operator==(const UngluedSpace&) const = default;

 private:
  S base_;
};

/// Replaces every dot a of the fragment by one copy per successor trail to a.
template <GradedSpace S>
GradedFragment<UngluedSpace<S>> unglue(const GradedFragment<S>& fragment) {
  std::vector<Trail<DotOf<S>>> trails;
  for (const auto& a : fragment.dots()) {
    for (auto& t : succ_trails(fragment, a)) trails.push_back(std::move(t));
  }
  return GradedFragment<UngluedSpace<S>>::build(UngluedSpace<S>(fragment.space()), std::move(trails));
}

/// Every non-maximal dot has exactly one immediate predecessor.
template <GradedSpace S>
bool is_tree(const GradedFragment<S>& fragment) {
  for (std::size_t i = 0; i < fragment.size(); ++i) {
    if (fragment.grade(i) > 0 && fragment.parents(i).size() != 1) return false;
  }
  return true;
}

/// True iff each dot has a finite successor set in the whole space and the
/// fragment is correctly graded.
template <GradedSpace S>
bool is_fann_fragment(const GradedFragment<S>& fragment) {
  for (const auto& a : fragment.dots()) {
    try {
      (void)fragment.space().successors(a);
    } catch (const UnsupportedEnumeration&) {
      return false;
    }
  }
  return fragment.grading_holds();
}

/// One line per dot: "grade<TAB>dot<TAB>successors", successors comma
/// separated in fragment order.
template <GradedSpace S>
std::string dump_fragment(const GradedFragment<S>& fragment) {
  std::ostringstream out;
  for (std::size_t i = 0; i < fragment.size(); ++i) {
    out << fragment.grade(i) << '\t' << to_string(fragment.dot(i)) << '\t';
    auto kids = fragment.children(i);
    for (std::size_t k = 0; k < kids.size(); ++k) {
      if (k > 0) out << ',';
      out << to_string(fragment.dot(kids[k]));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ntop
