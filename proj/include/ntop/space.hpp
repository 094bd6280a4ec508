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

#include <concepts>
#include <cstddef>
#include <string>
#include <vector>

namespace ntop {

/// A pre-natural space: a countable dot domain with decidable apartness and
/// refinement, plus a maximal dot. `refines(a, b)` reads "a is contained in b".
template <class S>
concept Space = std::copyable<S> && std::totally_ordered<typename S::Dot> &&
                requires(const S& s, const typename S::Dot& a, const typename S::Dot& b) {
                  { s.apart(a, b) } -> std::same_as<bool>;
                  { s.refines(a, b) } -> std::same_as<bool>;
                  { s.maximal() } -> std::convertible_to<typename S::Dot>;
                  { to_string(a) } -> std::convertible_to<std::string>;
                };

/// A space whose refinement order is a trea: finite immediate-predecessor
/// sets and a grade equal to the length of every successor trail from the
/// maximal dot. `successors` throws UnsupportedEnumeration when the set is
/// infinite.
template <class S>
concept GradedSpace = Space<S> && requires(const S& s, const typename S::Dot& a) {
  { s.grade(a) } -> std::convertible_to<std::size_t>;
  { s.parents(a) } -> std::convertible_to<std::vector<typename S::Dot>>;
  { s.successors(a) } -> std::convertible_to<std::vector<typename S::Dot>>;
};

template <Space S>
using DotOf = typename S::Dot;

template <Space S>
bool touch(const S& space, const DotOf<S>& a, const DotOf<S>& b) {
  return !space.apart(a, b);
}

template <Space S>
bool strictly_refines(const S& space, const DotOf<S>& a, const DotOf<S>& b) {
  return space.refines(a, b) && !(a == b);
}

template <GradedSpace S>
std::size_t grd(const S& space, const DotOf<S>& a) {
  return space.grade(a);
}

}  // namespace ntop
