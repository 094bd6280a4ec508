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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ntop {

/// A dot of Baire space: a finite sequence of naturals. The empty sequence
/// is the maximal dot.
struct BaireDot {
  std::vector<std::uint32_t> seq;

  auto operator<=>(const BaireDot&) const = default;
};

std::string to_string(const BaireDot& a);

/// Parses "(k1 k2 ... kj)"; "()" is the maximal dot.
BaireDot parse_baire_dot(std::string_view text);

struct BaireRelations {
  bool apart;
  bool refines;

  bool operator==(const BaireRelations&) const = default;
};

/// refines: a extends c (c is a prefix of a). apart: neither is a prefix of
/// the other.
BaireRelations baire_relations(const BaireDot& a, const BaireDot& c);

/// Baire space, or with an alphabet bound the corresponding subfan (Cantor
/// space for alphabet 2). Unbounded Baire space is infinitely branching, so
/// `successors` refuses to enumerate.
class BaireSpace {
 public:
  using Dot = BaireDot;

  static BaireSpace baire() { return BaireSpace(std::nullopt); }
  static BaireSpace cantor() { return BaireSpace(2u); }
  static BaireSpace bounded(std::uint32_t alphabet) { return BaireSpace(alphabet); }

  std::optional<std::uint32_t> alphabet() const { return alphabet_; }

  bool apart(const Dot& a, const Dot& b) const { return baire_relations(a, b).apart; }
  bool refines(const Dot& a, const Dot& b) const { return baire_relations(a, b).refines; }
  Dot maximal() const { return {}; }
  std::size_t grade(const Dot& a) const { return a.seq.size(); }
  std::vector<Dot> parents(const Dot& a) const;
  std::vector<Dot> successors(const Dot& a) const;
  std::string name() const;

  bool operator==(const BaireSpace&) const = default;

 private:
  explicit BaireSpace(std::optional<std::uint32_t> alphabet) : alphabet_(alphabet) {}

  std::optional<std::uint32_t> alphabet_;
};

/// All sequences of length <= max_length over {0, ..., alphabet-1}.
std::vector<BaireDot> baire_dots(std::size_t max_length, std::uint32_t alphabet);

}  // namespace ntop
