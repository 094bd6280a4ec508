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

#include "ntop/baire.hpp"

#include <algorithm>
#include <charconv>

#include "ntop/errors.hpp"

namespace ntop {

namespace {

bool is_prefix(const std::vector<std::uint32_t>& prefix, const std::vector<std::uint32_t>& seq) {
  return prefix.size() <= seq.size() && std::equal(prefix.begin(), prefix.end(), seq.begin());
}

}  // namespace

std::string to_string(const BaireDot& a) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.seq.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(a.seq[i]);
  }
  return out + ")";
}

BaireDot parse_baire_dot(std::string_view text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw ParseError("expected (k1 k2 ...), got '" + std::string(text) + "'");
  }
  auto body = text.substr(1, text.size() - 2);
  BaireDot out;
  while (!body.empty()) {
    if (body.front() == ' ') {
      body.remove_prefix(1);
      continue;
    }
    std::uint32_t k = 0;
    auto r = std::from_chars(body.data(), body.data() + body.size(), k);
    if (r.ec != std::errc{}) throw ParseError("malformed Baire dot '" + std::string(text) + "'");
    out.seq.push_back(k);
    body.remove_prefix(static_cast<std::size_t>(r.ptr - body.data()));
    if (!body.empty() && body.front() != ' ') {
      throw ParseError("malformed Baire dot '" + std::string(text) + "'");
    }
  }
  return out;
}

BaireRelations baire_relations(const BaireDot& a, const BaireDot& c) {
  const bool a_in_c = is_prefix(c.seq, a.seq);
  const bool c_in_a = is_prefix(a.seq, c.seq);
  return {!a_in_c && !c_in_a, a_in_c};
}

std::vector<BaireDot> BaireSpace::parents(const Dot& a) const {
  if (a.seq.empty()) return {};
  Dot p = a;
  p.seq.pop_back();
  return {p};
}

std::vector<BaireDot> BaireSpace::successors(const Dot& a) const {
  if (!alphabet_) throw UnsupportedEnumeration("Baire space is infinitely branching");
  std::vector<Dot> out;
  for (std::uint32_t k = 0; k < *alphabet_; ++k) {
    Dot s = a;
    s.seq.push_back(k);
    out.push_back(std::move(s));
  }
  return out;
}

std::string BaireSpace::name() const {
  if (!alphabet_) return "baire";
  if (*alphabet_ == 2) return "cantor";
  return "baire<" + std::to_string(*alphabet_) + ">";
}

std::vector<BaireDot> baire_dots(std::size_t max_length, std::uint32_t alphabet) {
  std::vector<BaireDot> out{BaireDot{}};
  std::size_t level_begin = 0;
  for (std::size_t len = 1; len <= max_length; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (std::uint32_t k = 0; k < alphabet; ++k) {
        BaireDot next = out[i];
        next.seq.push_back(k);
        out.push_back(std::move(next));
      }
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace ntop
