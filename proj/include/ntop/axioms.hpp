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
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ntop/space.hpp"

namespace ntop {

enum class Execution { serial, parallel };

struct AxiomResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  /// First violation in (a, b, c) index order; empty when passed.
  std::string counterexample;
};

struct AxiomReport {
  std::string space;
  std::size_t dots = 0;
  std::vector<AxiomResult> results;

  bool all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  }
  const AxiomResult* find(const std::string& name) const {
    for (const auto& r : results) {
      if (r.name == name) return &r;
    }
    return nullptr;
  }
  /// "<name>: PASS|FAIL (<checks> checks)[ counterexample]" per line.
  std::string render() const;
};

// Names of the checked properties, in report order. The first five are the
// pre-natural space axioms; the last checks the maximal dot.
inline constexpr const char* kDecidable = "decidable";
inline constexpr const char* kSymmetric = "apartness-symmetric";
inline constexpr const char* kAntireflexive = "apartness-antireflexive";
inline constexpr const char* kMonotone = "apartness-monotone";
inline constexpr const char* kPartialOrder = "refinement-partial-order";
inline constexpr const char* kMaximal = "maximal-dot";

namespace detail {

using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;
inline constexpr Triple kNoViolation{std::numeric_limits<std::size_t>::max(), 0, 0};

template <class Dot>
std::string describe(const std::vector<Dot>& dots, const Triple& t, int arity) {
  const auto& [i, j, k] = t;
  std::string out = "a=" + to_string(dots[i]);
  if (arity > 1) out += " b=" + to_string(dots[j]);
  if (arity > 2) out += " c=" + to_string(dots[k]);
  return out;
}

template <class Dot>
AxiomResult make_result(const char* name, std::size_t checks, const Triple& v,
                        const std::vector<Dot>& dots, int arity) {
  AxiomResult r{name, v == kNoViolation, checks, {}};
  if (!r.passed) r.counterexample = describe(dots, v, arity);
  return r;
}

inline void keep_min(Triple& best, const Triple& candidate) {
  if (candidate < best) best = candidate;
}

/// Bit matrix whose row x holds {c : c # x}.
struct ApartColumns {
  std::size_t n = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> bits;

  bool test(std::size_t x, std::size_t c) const { return (bits[x * words + c / 64] >> (c % 64)) & 1u; }
  void set(std::size_t x, std::size_t c) { bits[x * words + c / 64] |= std::uint64_t{1} << (c % 64); }
};

template <class Dot>
std::vector<Dot> canonical_dots(std::vector<Dot> dots) {
  std::sort(dots.begin(), dots.end());
  dots.erase(std::unique(dots.begin(), dots.end()), dots.end());
  return dots;
}

}  // namespace detail

/// Serial reference: evaluates the relations directly, in index order.
template <Space S>
AxiomReport check_axioms_serial(const S& space, std::vector<DotOf<S>> input) {
  using detail::kNoViolation;
  using detail::Triple;
  const auto dots = detail::canonical_dots(std::move(input));
  const std::size_t n = dots.size();
  AxiomReport report;
  report.dots = n;

  Triple undecidable = kNoViolation;
  Triple asym = kNoViolation;
  Triple reflexive_apart = kNoViolation;
  Triple nonmonotone = kNoViolation;
  Triple not_order = kNoViolation;
  Triple not_maximal = kNoViolation;
  std::size_t order_checks = 0;
  std::size_t monotone_checks = 0;

  auto apart = [&](std::size_t i, std::size_t j) -> std::optional<bool> {
    try {
      return space.apart(dots[i], dots[j]);
    } catch (...) {
      return std::nullopt;
    }
  };
  auto refines = [&](std::size_t i, std::size_t j) -> std::optional<bool> {
    try {
      return space.refines(dots[i], dots[j]);
    } catch (...) {
      return std::nullopt;
    }
  };

  const auto top = space.maximal();
  for (std::size_t i = 0; i < n; ++i) {
    bool has_top = false;
    try {
      has_top = space.refines(dots[i], top);
    } catch (...) {
    }
    if (!has_top) detail::keep_min(not_maximal, {i, 0, 0});
    if (apart(i, i).value_or(false)) detail::keep_min(reflexive_apart, {i, 0, 0});
    if (!refines(i, i).value_or(false)) detail::keep_min(not_order, {i, i, i});
    for (std::size_t j = 0; j < n; ++j) {
      auto ab = apart(i, j);
      auto ba = apart(j, i);
      auto rij = refines(i, j);
      if (!ab || !ba || !rij) detail::keep_min(undecidable, {i, j, 0});
      if (j > i && ab && ba && *ab != *ba) detail::keep_min(asym, {i, j, 0});
      if (!rij.value_or(false)) continue;
      // i refines j
      if (j != i) {
        ++order_checks;
        if (refines(j, i).value_or(false)) detail::keep_min(not_order, {i, j, i});
        for (std::size_t k = 0; k < n; ++k) {
          if (refines(j, k).value_or(false)) {
            ++order_checks;
            if (!refines(i, k).value_or(false)) detail::keep_min(not_order, {i, j, k});
          }
        }
      }
      monotone_checks += n;
      for (std::size_t c = 0; c < n; ++c) {
        if (apart(c, j).value_or(false) && !apart(c, i).value_or(false)) {
          detail::keep_min(nonmonotone, {i, j, c});
          break;
        }
      }
    }
  }
  report.results.push_back(detail::make_result(kDecidable, n * n, undecidable, dots, 2));
  report.results.push_back(detail::make_result(kSymmetric, n * (n - 1) / 2, asym, dots, 2));
  report.results.push_back(detail::make_result(kAntireflexive, n, reflexive_apart, dots, 1));
  report.results.push_back(detail::make_result(kMonotone, monotone_checks, nonmonotone, dots, 3));
  report.results.push_back(detail::make_result(kPartialOrder, n + order_checks, not_order, dots, 3));
  report.results.push_back(detail::make_result(kMaximal, n, not_maximal, dots, 1));
  return report;
}

/// OpenMP kernel: one parallel pass materializes apartness as bit columns
/// and refinement as sorted ancestor lists; the axioms are then checked
/// with word-wide subset tests.
template <Space S>
AxiomReport check_axioms_parallel(const S& space, std::vector<DotOf<S>> input) {
  using detail::kNoViolation;
  using detail::Triple;
  const auto dots = detail::canonical_dots(std::move(input));
  const std::size_t n = dots.size();
  const auto sn = static_cast<std::int64_t>(n);
  AxiomReport report;
  report.dots = n;

  detail::ApartColumns cols{n, (n + 63) / 64, {}};
  cols.bits.assign(cols.n * cols.words, 0);
  std::vector<std::vector<std::size_t>> ancestors(n);
  std::vector<std::uint8_t> apart_self(n, 0);
  Triple undecidable = kNoViolation;
  Triple not_maximal = kNoViolation;
  const auto top = space.maximal();

#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t sx = 0; sx < sn; ++sx) {
    const auto x = static_cast<std::size_t>(sx);
    Triple local = kNoViolation;
    for (std::size_t c = 0; c < n; ++c) {
      try {
        if (space.apart(dots[c], dots[x])) cols.set(x, c);
        if (space.refines(dots[x], dots[c])) ancestors[x].push_back(c);
      } catch (...) {
        if (local == kNoViolation) local = {x, c, 0};
      }
    }
    bool has_top = false;
    try {
      has_top = space.refines(dots[x], top);
    } catch (...) {
    }
    if (local != kNoViolation || !has_top) {
#pragma omp critical(ntop_axioms)
      {
        detail::keep_min(undecidable, local);
        if (!has_top) detail::keep_min(not_maximal, {x, 0, 0});
      }
    }
  }
  // cols row x holds c # x, so apart(x, c) is cols.test(c, x).
  Triple asym = kNoViolation;
  Triple reflexive_apart = kNoViolation;
  Triple nonmonotone = kNoViolation;
  Triple not_order = kNoViolation;
  std::size_t order_checks = 0;
  std::size_t monotone_checks = 0;

#pragma omp parallel for schedule(dynamic, 16) reduction(+ : order_checks, monotone_checks)
  for (std::int64_t si = 0; si < sn; ++si) {
    const auto i = static_cast<std::size_t>(si);
    Triple l_asym = kNoViolation, l_refl = kNoViolation, l_mono = kNoViolation,
           l_order = kNoViolation;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cols.test(j, i) != cols.test(i, j)) {
        l_asym = {i, j, 0};
        break;
      }
    }
    if (cols.test(i, i)) l_refl = {i, 0, 0};
    const auto& anc = ancestors[i];
    auto has = [](const std::vector<std::size_t>& v, std::size_t k) {
      return std::binary_search(v.begin(), v.end(), k);
    };
    if (!has(anc, i)) l_order = {i, i, i};
    for (std::size_t j : anc) {
      if (j != i) {
        ++order_checks;
        if (has(ancestors[j], i)) detail::keep_min(l_order, {i, j, i});
        for (std::size_t k : ancestors[j]) {
          ++order_checks;
          if (!has(anc, k)) detail::keep_min(l_order, {i, j, k});
        }
      }
      // every c apart from j must be apart from i
      const std::uint64_t* bj = &cols.bits[j * cols.words];
      const std::uint64_t* bi = &cols.bits[i * cols.words];
      monotone_checks += n;
      for (std::size_t w = 0; w < cols.words; ++w) {
        const std::uint64_t missing = bj[w] & ~bi[w];
        if (missing) {
          const auto c = w * 64 + static_cast<std::size_t>(__builtin_ctzll(missing));
          detail::keep_min(l_mono, {i, j, c});
          break;
        }
      }
    }
    if (l_asym != kNoViolation || l_refl != kNoViolation || l_mono != kNoViolation ||
        l_order != kNoViolation) {
#pragma omp critical(ntop_axioms)
      {
        detail::keep_min(asym, l_asym);
        detail::keep_min(reflexive_apart, l_refl);
        detail::keep_min(nonmonotone, l_mono);
        detail::keep_min(not_order, l_order);
      }
    }
  }
  report.results.push_back(detail::make_result(kDecidable, n * n, undecidable, dots, 2));
  report.results.push_back(detail::make_result(kSymmetric, n * (n - 1) / 2, asym, dots, 2));
  report.results.push_back(detail::make_result(kAntireflexive, n, reflexive_apart, dots, 1));
  report.results.push_back(detail::make_result(kMonotone, monotone_checks, nonmonotone, dots, 3));
  report.results.push_back(detail::make_result(kPartialOrder, n + order_checks, not_order, dots, 3));
  report.results.push_back(detail::make_result(kMaximal, n, not_maximal, dots, 1));
  return report;
}

template <Space S>
AxiomReport check_axioms(const S& space, std::vector<DotOf<S>> dots,
                         Execution exec = Execution::parallel) {
  return exec == Execution::parallel ? check_axioms_parallel(space, std::move(dots))
                                     : check_axioms_serial(space, std::move(dots));
}

inline std::string AxiomReport::render() const {
  std::string out;
  for (const auto& r : results) {
    out += r.name;
    out += r.passed ? ": PASS" : ": FAIL";
    out += " (" + std::to_string(r.checks) + " checks)";
    if (!r.passed) out += " counterexample " + r.counterexample;
    out += '\n';
  }
  return out;
}

}  // namespace ntop
