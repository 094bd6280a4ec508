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

#include "ntop/expression.hpp"

#include <algorithm>
#include <cctype>

#include "ntop/errors.hpp"

namespace ntop {
namespace {

ExprPtr make(Op op, std::vector<ExprPtr> args) {
  auto e = std::make_shared<Expr>();
  e->op = op;
  e->args = std::move(args);
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    auto e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  ExprPtr expr() {
    auto lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make(Op::add, {lhs, term()});
      } else if (accept('-')) {
        lhs = make(Op::add, {lhs, make(Op::neg, {term()})});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    auto lhs = factor();
    while (accept('*')) lhs = make(Op::mul, {lhs, factor()});
    return lhs;
  }

  ExprPtr factor() {
    skip();
    if (accept('(')) {
      auto e = expr();
      expect(')');
      return e;
    }
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "neg") {
        expect('(');
        auto a = expr();
        expect(')');
        return make(Op::neg, {a});
      }
      if (name == "min" || name == "max") {
        expect('(');
        auto a = expr();
        expect(',');
        auto b = expr();
        expect(')');
        return make(name == "min" ? Op::min : Op::max, {a, b});
      }
      pos_ = start;
      fail("unknown function '" + std::string(name) + "'");
    }
    return literal();
  }

  ExprPtr literal() {
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    auto digits = [&] {
      const std::size_t from = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return pos_ > from;
    };
    bool any = digits();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      if (!any || !digits()) fail("malformed fraction");
    } else if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      if (!digits()) fail("malformed decimal");
      any = true;
    }
    if (!any) {
      pos_ = start;
      fail(pos_ < text_.size() ? "expected a number" : "unexpected end of input");
    }
    auto e = std::make_shared<Expr>();
    e->op = Op::literal;
    try {
      e->value = parse_rational(text_.substr(start, pos_ - start));
    } catch (const ParseError& err) {
      pos_ = start;
      fail(err.what());
    }
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

const char* op_name(Op op) {
  switch (op) {
    case Op::literal:
      return "lit";
    case Op::neg:
      return "neg";
    case Op::add:
      return "add";
    case Op::mul:
      return "mul";
    case Op::min:
      return "min";
    case Op::max:
      return "max";
  }
  return "?";
}

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

Rational exact_value(const Expr& e) {
  switch (e.op) {
    case Op::literal:
      return e.value;
    case Op::neg:
      return -exact_value(*e.args[0]);
    case Op::add:
      return exact_value(*e.args[0]) + exact_value(*e.args[1]);
    case Op::mul:
      return exact_value(*e.args[0]) * exact_value(*e.args[1]);
    case Op::min:
      return std::min(exact_value(*e.args[0]), exact_value(*e.args[1]));
    case Op::max:
      return std::max(exact_value(*e.args[0]), exact_value(*e.args[1]));
  }
  return {};
}

std::string to_string(const Expr& e) {
  if (e.op == Op::literal) return to_string(e.value);
  std::string out = op_name(e.op);
  out += '(';
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    if (i) out += ',';
    out += to_string(*e.args[i]);
  }
  return out + ')';
}

Point<LeanDyadicDot> lower(const Expr& e, std::size_t fuel) {
  switch (e.op) {
    case Op::literal:
      return from_rational(e.value);
    case Op::neg:
      return apply_map(neg_map(), lower(*e.args[0], fuel), fuel);
    case Op::add:
    case Op::mul: {
      auto pair = pair_points(lower(*e.args[0], fuel), lower(*e.args[1], fuel), fuel);
      return apply_transducer(e.op == Op::add ? add_transducer() : mul_transducer(), pair, fuel);
    }
    case Op::min:
    case Op::max: {
      auto pair = pair_points(lower(*e.args[0], fuel), lower(*e.args[1], fuel), fuel);
      return apply_map(e.op == Op::min ? min_map() : max_map(), pair, fuel);
    }
  }
  throw PreconditionError("lower: unknown operator");
}

}  // namespace ntop
