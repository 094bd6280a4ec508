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

// Wall-clock comparison of the serial reference kernels against the OpenMP
// ones. Usage: ntop_bench [repetitions]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "ntop/arithmetic.hpp"
#include "ntop/axioms.hpp"
#include "ntop/cantor.hpp"
#include "ntop/lean_dyadic.hpp"
#include "ntop/morphism.hpp"
#include "ntop/nary.hpp"

namespace {

using namespace ntop;

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s < best) best = s;
  }
  return best;
}

void row(const std::string& name, double serial, double parallel, bool agree) {
  std::printf("%-34s %10.4f %10.4f %8.2fx  %s\n", name.c_str(), serial, parallel, serial / parallel,
              agree ? "agree" : "DISAGREE");
}

template <Space S>
void bench_axioms(const std::string& name, const S& space, const std::vector<DotOf<S>>& dots, int reps) {
  AxiomReport s;
  AxiomReport p;
  const double ts = best_of(reps, [&] { s = check_axioms(space, dots, Execution::serial); });
  const double tp = best_of(reps, [&] { p = check_axioms(space, dots, Execution::parallel); });
  row("axioms " + name + " (" + std::to_string(s.dots) + ")", ts, tp, s.all_passed() == p.all_passed());
}

template <GradedSpace A, Space B>
void bench_monotone(const std::string& name, const RefinementMap<A, B>& f, const GradedFragment<A>& fragment,
                    int reps) {
  bool s = false;
  bool p = false;
  const double ts = best_of(reps, [&] { s = check_monotone(f, fragment, Execution::serial); });
  const double tp = best_of(reps, [&] { p = check_monotone(f, fragment, Execution::parallel); });
  row("monotone " + name + " (" + std::to_string(fragment.size()) + ")", ts, tp, s == p);
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::printf("threads: %d, best of %d\n", omp_get_max_threads(), reps);
  std::printf("%-34s %10s %10s %9s\n", "kernel", "serial s", "omp s", "speedup");
  bench_axioms("sigmaR d7", SigmaR{}, sigma_r_dots(7, 3), reps);
  bench_axioms("ternary d6", NArySpace::unit(3), nary_unit_dots(3, 6), reps);
  const auto pair = sigma_pair();
  const auto side = sigma_r_dots(3, 1);
  bench_axioms("sigmaR^2 d3", pair, product_dots(pair, side, side), reps);
  bench_monotone("cantor d7", cantor_map(),
                 GradedFragment<NArySpace>::build(NArySpace::unit(3), nary_unit_dots(3, 7)), reps);
  bench_monotone("neg sigmaR d7", neg_map(), GradedFragment<SigmaR>::closure(SigmaR{}, sigma_r_dots(7, 3)), reps);
  return 0;
}
