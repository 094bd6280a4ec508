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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ntop/commands.hpp"
#include "ntop/errors.hpp"

int main(int argc, char** argv) {
  using namespace ntop;

  std::size_t fuel = 0;
  try {
    fuel = default_fuel_from_env();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Exact real arithmetic and natural-topology tools"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--fuel", fuel, "Pulls allowed per precision level")->check(CLI::PositiveNumber);

  std::string expr;
  int precision = 16;
  auto* eval = app.add_subcommand("eval", "Evaluate an expression to a lean dyadic dot");
  eval->add_option("expr", expr, "Expression over rationals, + - *, neg, min, max")->required();
  eval->add_option("-p,--precision", precision, "Result width at most 2^(1-p)")->check(CLI::Range(0, 60));

  std::string space;
  int depth = 6;
  bool serial = false;
  bool inject_fault = false;
  auto* axioms = app.add_subcommand("axioms", "Run the pre-natural axiom suite on a finite fragment");
  axioms->add_option("space", space, "sigmaR, sigma01, binary, ternary, decimal, baire, cantor, product:sigmaR")
      ->required();
  axioms->add_option("--depth", depth, "Fragment depth");
  axioms->add_flag("--serial", serial, "Use the serial reference kernel");
  axioms->add_flag("--inject-fault", inject_fault)->group("");

  std::string x;
  int cantor_precision = 12;
  auto* cantor = app.add_subcommand("cantor", "Evaluate the Cantor function at a rational in [0,1]");
  cantor->add_option("x", x)->required();
  cantor->add_option("-p,--precision", cantor_precision, "Result width at most 2^(1-p)");

  std::string line;
  std::string ball;
  int tolerance = 12;
  auto* hawkeye = app.add_subcommand("hawkeye", "Call a ball IN, OUT or LET against a line");
  hawkeye->add_option("line", line)->required();
  hawkeye->add_option("ball", ball)->required();
  hawkeye->add_option("--tolerance", tolerance, "LET once the undecided width is at most 2^-tolerance");

  std::string presentation;
  int max_level = 5;
  auto* fann = app.add_subcommand("fann", "Build the fann of a metric presentation");
  fann->add_option("presentation", presentation, "unit-interval, cantor, point, or a presentation file")
      ->required();
  fann->add_option("--max-level", max_level, "Deepest net level");

  int fragment_depth = 2;
  int spread = 1;
  bool unglued = false;
  auto* fragment = app.add_subcommand("fragment", "Dump a sigma_R fragment");
  fragment->add_option("--depth", fragment_depth, "Deepest dot depth");
  fragment->add_option("--spread", spread, "Keep |n| <= 2^(m+spread)");
  fragment->add_flag("--unglue", unglued, "Dump the unglued tree instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CommandIo io{std::cout, std::cerr};
  if (*eval) return run_eval(expr, precision, fuel, io);
  if (*axioms) {
    AxiomOptions options;
    options.exec = serial ? Execution::serial : Execution::parallel;
    options.inject_fault = inject_fault;
    return run_axioms(space, depth, options, io);
  }
  if (*cantor) return run_cantor(x, cantor_precision, fuel, io);
  if (*hawkeye) return run_hawkeye(line, ball, tolerance, fuel, io);
  if (*fann) return run_fann(presentation, max_level, io);
  return run_fragment(fragment_depth, spread, unglued, io);
}
