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
#include <iosfwd>
#include <optional>
#include <string>

#include "ntop/axioms.hpp"
#include "ntop/point.hpp"

namespace ntop {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitStall = 3;

struct CommandIo {
  std::ostream& out;
  std::ostream& err;
};

/// NTOP_FUEL when set to a positive integer, else kDefaultFuel. Throws
/// PreconditionError on a malformed value.
std::size_t default_fuel_from_env();

int run_eval(const std::string& expr, int precision, std::size_t fuel, CommandIo io);

/// Space names accepted by run_axioms and run_fragment.
std::vector<std::string> axiom_space_names();

struct AxiomOptions {
  Execution exec = Execution::parallel;
  /// Test hook: breaks apartness symmetry on one touching pair.
  bool inject_fault = false;
};

int run_axioms(const std::string& space, int depth, AxiomOptions options, CommandIo io);
int run_cantor(const std::string& x, int precision, std::size_t fuel, CommandIo io);
int run_hawkeye(const std::string& line, const std::string& ball, int tolerance, std::size_t fuel,
                CommandIo io);
/// `presentation` is a builtin name or a file path.
int run_fann(const std::string& presentation, int max_level, CommandIo io);
/// Dumps the sigma_R fragment of dots with depth <= depth and
/// |n| <= 2^(m+spread), optionally unglued.
int run_fragment(int depth, int spread, bool unglued, CommandIo io);

}  // namespace ntop
