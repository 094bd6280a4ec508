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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ntop/axioms.hpp"
#include "ntop/errors.hpp"
#include "ntop/fragment.hpp"
#include "ntop/point.hpp"
#include "ntop/space.hpp"

namespace ntop {

/// A pure dot-to-dot map between two spaces. It represents a continuous
/// function when it is monotone, sends points to points and reflects
/// apartness of points; those properties are checked, not enforced.
template <Space From, Space To>
class RefinementMap {
 public:
  using Function = std::function<DotOf<To>(const DotOf<From>&)>;

  RefinementMap(From domain, To codomain, Function f, std::string name = "map")
      : domain_(std::move(domain)), codomain_(std::move(codomain)), f_(std::move(f)),
        name_(std::move(name)) {}

  DotOf<To> operator()(const DotOf<From>& a) const { return f_(a); }

  const From& domain() const { return domain_; }
  const To& codomain() const { return codomain_; }
  const std::string& name() const { return name_; }

 private:
  From domain_;
  To codomain_;
  Function f_;
  std::string name_;
};

template <Space S>
RefinementMap<S, S> identity_map(const S& space) {
  return {space, space, [](const DotOf<S>& a) { return a; }, "id"};
}

/// h(a) = g(f(a)). Throws SpaceMismatch unless f's codomain is g's domain.
template <Space A, Space B, Space C>
RefinementMap<A, C> compose(const RefinementMap<A, B>& f, const RefinementMap<B, C>& g) {
  if (!(f.codomain() == g.domain())) {
    throw SpaceMismatch("compose: codomain of " + f.name() + " is not the domain of " + g.name());
  }
  return {f.domain(), g.codomain(), [f, g](const DotOf<A>& a) { return g(f(a)); },
          g.name() + "." + f.name()};
}

/// The image point f(p[0]), f(p[1]), ... with consecutive duplicates
/// collapsed, so the result descends strictly. More than `fuel` identical
/// images in a row raise StallError; a non-refining image raises
/// ContractViolation.
template <Space From, Space To>
Point<DotOf<To>> apply_map(const RefinementMap<From, To>& f, Point<DotOf<From>> p,
                           std::size_t fuel = kDefaultFuel) {
  struct Cursor {
    std::size_t next_index = 0;
    std::optional<DotOf<To>> last;
  };
  return Point<DotOf<To>>([f, p = std::move(p), fuel, cur = Cursor{}]() mutable {
    for (std::size_t tries = 0; tries <= fuel; ++tries) {
      DotOf<To> image = f(p[cur.next_index++]);
      if (!cur.last) {
        cur.last = image;
        return image;
      }
      if (image == *cur.last) continue;
      if (!f.codomain().refines(image, *cur.last)) {
        throw ContractViolation(f.name() + ": image " + to_string(image) + " does not refine " +
                                to_string(*cur.last));
      }
      cur.last = image;
      return image;
    }
    throw StallError(f.name() + ": image stream stopped shrinking at input index " +
                         std::to_string(cur.next_index),
                     fuel);
  });
}

/// First fragment pair (a, b) with a refining b but f(a) not refining f(b),
/// as fragment indices.
template <GradedSpace From, Space To>
std::optional<std::pair<std::size_t, std::size_t>> find_monotonicity_violation(
    const RefinementMap<From, To>& f, const GradedFragment<From>& fragment,
    Execution exec = Execution::parallel) {
  const std::size_t n = fragment.size();
  std::vector<DotOf<To>> images;
  images.reserve(n);
  for (const auto& a : fragment.dots()) images.push_back(f(a));
  const auto& dom = fragment.space();
  const auto& cod = f.codomain();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::pair<std::size_t, std::size_t> best{none, none};

  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n && best.first == none; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (dom.refines(fragment.dot(i), fragment.dot(j)) && !cod.refines(images[i], images[j])) {
          best = {i, j};
          break;
        }
      }
    }
  } else {
    const auto sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t si = 0; si < sn; ++si) {
      const auto i = static_cast<std::size_t>(si);
      for (std::size_t j = 0; j < n; ++j) {
        if (dom.refines(fragment.dot(i), fragment.dot(j)) && !cod.refines(images[i], images[j])) {
#pragma omp critical(ntop_monotone)
          best = std::min(best, std::pair<std::size_t, std::size_t>{i, j});
          break;
        }
      }
    }
  }
  if (best.first == none) return std::nullopt;
  return best;
}

/// Exhaustive monotonicity over all fragment pairs.
template <GradedSpace From, Space To>
bool check_monotone(const RefinementMap<From, To>& f, const GradedFragment<From>& fragment,
                    Execution exec = Execution::parallel) {
  return !find_monotonicity_violation(f, fragment, exec).has_value();
}

/// A trail morphism realized as a state-passing step function: the state is
/// the previous output (initially the codomain's maximal dot) and every
/// output must refine it.
template <Space In, Space Out>
struct Transducer {
  using Step = std::function<DotOf<Out>(const DotOf<Out>& state, const DotOf<In>& input)>;

  In domain;
  Out codomain;
  Step step;
  std::string name = "transducer";
};

/// Runs a transducer along a point, emitting each strictly new output. A
/// step that does not refine its state raises ContractViolation; more than
/// `fuel` unproductive inputs in a row raise StallError.
template <Space In, Space Out>
Point<DotOf<Out>> apply_transducer(const Transducer<In, Out>& t, Point<DotOf<In>> p,
                                   std::size_t fuel = kDefaultFuel) {
  struct Cursor {
    std::size_t next_index = 0;
    DotOf<Out> state;
  };
  return Point<DotOf<Out>>(
      [t, p = std::move(p), fuel, cur = Cursor{0, t.codomain.maximal()}]() mutable {
        for (std::size_t tries = 0; tries <= fuel; ++tries) {
          DotOf<Out> next = t.step(cur.state, p[cur.next_index++]);
          if (!t.codomain.refines(next, cur.state)) {
            throw ContractViolation(t.name + ": output " + to_string(next) +
                                    " does not refine state " + to_string(cur.state));
          }
          if (next == cur.state) continue;
          cur.state = next;
          return next;
        }
        throw StallError(t.name + ": no progress by input index " + std::to_string(cur.next_index),
                         fuel);
      });
}

}  // namespace ntop
