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

#include "ntop/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "ntop/arithmetic.hpp"
#include "ntop/baire.hpp"
#include "ntop/cantor.hpp"
#include "ntop/errors.hpp"
#include "ntop/expression.hpp"
#include "ntop/fragment.hpp"
#include "ntop/lean_dyadic.hpp"
#include "ntop/metric_fann.hpp"
#include "ntop/nary.hpp"
#include "ntop/product.hpp"

namespace ntop {
namespace {

/// Flips apartness of one ordered touching pair, breaking symmetry.
template <Space S>
class FaultySpace {
 public:
  using Dot = DotOf<S>;

  FaultySpace(S inner, Dot a, Dot b) : inner_(std::move(inner)), a_(std::move(a)), b_(std::move(b)) {}

  bool apart(const Dot& x, const Dot& y) const {
    if (x == a_ && y == b_) return true;
    return inner_.apart(x, y);
  }
  bool refines(const Dot& x, const Dot& y) const { return inner_.refines(x, y); }
  Dot maximal() const { return inner_.maximal(); }

 private:
  S inner_;
  Dot a_;
  Dot b_;
};

template <Space S>
AxiomReport run_suite(const S& space, std::vector<DotOf<S>> dots, const AxiomOptions& options) {
  AxiomReport report;
  if (options.inject_fault) {
    // first touching pair of distinct non-maximal dots
    const auto top = space.maximal();
    for (std::size_t i = 0; i < dots.size() && report.results.empty(); ++i) {
      for (std::size_t j = 0; j < dots.size(); ++j) {
        if (i == j || dots[i] == top || dots[j] == top || space.apart(dots[i], dots[j])) continue;
        report = check_axioms(FaultySpace<S>(space, dots[i], dots[j]), dots, options.exec);
        break;
      }
    }
  } else {
    report = check_axioms(space, std::move(dots), options.exec);
  }
  report.space = space.name();
  return report;
}

struct SpaceLimit {
  const char* name;
  int max_depth;
};

constexpr SpaceLimit kSpaceLimits[] = {
    {"sigmaR", 8}, {"sigma01", 10}, {"binary", 10}, {"ternary", 7},
    {"decimal", 6}, {"baire", 6},    {"cantor", 12}, {"product:sigmaR", 4},
};

AxiomReport axiom_report(const std::string& name, int depth, const AxiomOptions& options) {
  if (name == "sigmaR") return run_suite(SigmaR{}, sigma_r_dots(depth, 3), options);
  if (name == "sigma01") return run_suite(SigmaUnit{}, sigma_unit_dots(depth), options);
  if (name == "binary") return run_suite(NArySpace::unit(2), nary_unit_dots(2, depth), options);
  if (name == "ternary") return run_suite(NArySpace::unit(3), nary_unit_dots(3, depth), options);
  if (name == "decimal") {
    const Rational half(1, 2);
    const Rational eps(1, 1000);
    return run_suite(NArySpace::unit(10),
                     nary_window_dots(10, depth, std::min(depth, 3), half - eps, half + eps), options);
  }
  if (name == "baire") return run_suite(BaireSpace::baire(), baire_dots(static_cast<std::size_t>(depth), 3), options);
  if (name == "cantor") return run_suite(BaireSpace::cantor(), baire_dots(static_cast<std::size_t>(depth), 2), options);
  const auto space = sigma_pair();
  const auto side = sigma_r_dots(depth, 1);
  return run_suite(space, product_dots(space, side, side), options);
}

void print_stall(const StallError& e, CommandIo io) {
  io.err << "stall: " << e.what() << "\nhint: raise --fuel or NTOP_FUEL (current " << e.fuel() << ")\n";
}

}  // namespace

std::size_t default_fuel_from_env() {
  const char* raw = std::getenv("NTOP_FUEL");
  if (raw == nullptr || *raw == '\0') return kDefaultFuel;
  const std::string text(raw);
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value == 0 || text.front() == '-') {
    throw PreconditionError("NTOP_FUEL must be a positive integer, got '" + text + "'");
  }
  return value;
}

int run_eval(const std::string& expr, int precision, std::size_t fuel, CommandIo io) {
  try {
    const auto e = parse_expression(expr);
    io.out << to_string(eval(lower(*e, fuel), precision, fuel)) << '\n';
    return kExitOk;
  } catch (const StallError& e) {
    print_stall(e, io);
    return kExitStall;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

std::vector<std::string> axiom_space_names() {
  std::vector<std::string> out;
  for (const auto& s : kSpaceLimits) out.emplace_back(s.name);
  return out;
}

int run_axioms(const std::string& space, int depth, AxiomOptions options, CommandIo io) {
  const SpaceLimit* limit = nullptr;
  for (const auto& s : kSpaceLimits) {
    if (space == s.name) limit = &s;
  }
  if (limit == nullptr) {
    io.err << "error: unknown space '" << space << "'; expected one of";
    for (const auto& s : kSpaceLimits) io.err << ' ' << s.name;
    io.err << '\n';
    return kExitUsage;
  }
  if (depth < 0 || depth > limit->max_depth) {
    io.err << "error: depth for " << space << " must lie in [0, " << limit->max_depth << "]\n";
    return kExitUsage;
  }
  const AxiomReport report = axiom_report(space, depth, options);
  io.out << "space " << report.space << ", depth " << depth << ", " << report.dots << " dots\n"
         << report.render() << (report.all_passed() ? "result: PASS\n" : "result: FAIL\n");
  return report.all_passed() ? kExitOk : 1;
}

int run_cantor(const std::string& x_text, int precision, std::size_t fuel, CommandIo io) {
  try {
    const Rational x = parse_rational(x_text);
    if (x < 0 || x > 1) throw PreconditionError("cantor: x must lie in [0, 1]");
    const NArySpace ternary = NArySpace::unit(3);
    if (precision < 0 || precision > nary_max_depth(3) + 1) {
      throw PreconditionError("cantor: precision must lie in [0, " + std::to_string(nary_max_depth(3) + 1) + "]");
    }
    const auto image = apply_map(cantor_map(), from_nary(ternary, x), fuel);
    const Rational limit = pow2(1 - precision);
    const std::size_t budget = fuel * (static_cast<std::size_t>(precision) + 1);
    for (std::size_t i = 0; i < budget; ++i) {
      const NAryDot& d = image[i];
      if (d.upper() - d.lower() <= limit) {
        io.out << to_string(d) << " = [" << to_string(d.lower()) << ", " << to_string(d.upper()) << "]\n";
        return kExitOk;
      }
    }
    throw StallError("cantor: no dot of width 2^" + std::to_string(1 - precision), fuel);
  } catch (const StallError& e) {
    print_stall(e, io);
    return kExitStall;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_hawkeye(const std::string& line, const std::string& ball, int tolerance, std::size_t fuel,
                CommandIo io) {
  try {
    const BallCall call = hawkeye_decide(parse_rational(line), from_rational(parse_rational(ball)), tolerance, fuel);
    io.out << to_string(call) << '\n';
    return kExitOk;
  } catch (const StallError& e) {
    print_stall(e, io);
    return kExitStall;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_fann(const std::string& presentation, int max_level, CommandIo io) {
  try {
    if (max_level < 0 || max_level > kMaxBuiltinLevel) {
      throw PreconditionError("max level must lie in [0, " + std::to_string(kMaxBuiltinLevel) + "]");
    }
    std::optional<MetricPresentation> pres = builtin_presentation(presentation, max_level);
    if (!pres) {
      std::ifstream in(presentation);
      if (!in) {
        throw PreconditionError("'" + presentation + "' is neither a builtin presentation nor a readable file");
      }
      std::stringstream text;
      text << in.rdbuf();
      pres = parse_presentation(text.str(), presentation);
    }
    const Fann fann = build_fann(*pres, max_level);
    const auto fragment = fann_fragment(fann);
    io.out << "presentation " << pres->name() << ", max level " << max_level << '\n';
    io.out << "level\tdots\tmin-succ\tmax-succ\tmean-succ\n";
    for (std::size_t level = 0; level <= fann.max_level(); ++level) {
      std::size_t count = 0;
      std::size_t lo = 0;
      std::size_t hi = 0;
      std::size_t total = 0;
      for (const auto& d : fann.dots()) {
        if (d.top || d.level != level) continue;
        const std::size_t k = fann.successors(d).size();
        lo = count == 0 ? k : std::min(lo, k);
        hi = std::max(hi, k);
        total += k;
        ++count;
      }
      io.out << level << '\t' << count << '\t';
      if (level == fann.max_level()) {
        io.out << "-\t-\t-\n";
      } else {
        io.out << lo << '\t' << hi << '\t' << to_string(Rational(static_cast<long>(total), static_cast<long>(count)))
               << '\n';
      }
    }
    bool chain = true;
    for (const auto& d : fann.dots()) chain = chain && fann.successors(d).size() <= 1;
    std::size_t apart_pairs = 0;
    for (std::size_t i = 0; i < fann.dots().size(); ++i) {
      for (std::size_t j = i + 1; j < fann.dots().size(); ++j) apart_pairs += fann.apart(fann.dots()[i], fann.dots()[j]);
    }
    io.out << "grading: " << (fragment.grading_holds() ? "OK" : "VIOLATED") << '\n';
    io.out << "shape: " << (chain ? "chain" : "branching") << '\n';
    io.out << "apart pairs: " << apart_pairs << '\n';
    AxiomReport report = check_axioms(fann, fann.dots());
    io.out << report.render() << (report.all_passed() ? "result: PASS\n" : "result: FAIL\n");
    return report.all_passed() && fragment.grading_holds() ? kExitOk : 1;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_fragment(int depth, int spread, bool unglued, CommandIo io) {
  try {
    if (depth < 0 || depth > 6 || spread < 0 || spread > 3) {
      throw PreconditionError("fragment: depth must lie in [0, 6] and spread in [0, 3]");
    }
    auto fragment = GradedFragment<SigmaR>::closure(SigmaR{}, sigma_r_dots(depth, spread));
    io.out << (unglued ? dump_fragment(unglue(fragment)) : dump_fragment(fragment));
    return kExitOk;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace ntop
