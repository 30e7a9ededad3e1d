// Copyright 2026 The duflo Authors
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

#include "duflo/io/expr.hpp"

#include <cctype>

#include "duflo/error.hpp"
#include "duflo/liesym/calculus.hpp"

namespace duflo {

namespace {
constexpr std::uint32_t kMaxExponent = 4096;
}  // namespace

Expr Expr::sum(std::vector<Expr> terms, std::vector<bool> negated) {
  Expr e;
  e.kind = Kind::Sum;
  e.children = std::move(terms);
  e.negated = std::move(negated);
  return e;
}

Expr Expr::product(std::vector<Expr> factors) {
  Expr e;
  e.kind = Kind::Product;
  e.children = std::move(factors);
  return e;
}

Expr Expr::power(Expr base, std::uint32_t exponent) {
  Expr e;
  e.kind = Kind::Power;
  e.children.push_back(std::move(base));
  e.exponent = exponent;
  return e;
}

Expr Expr::gen(std::size_t i) {
  Expr e;
  e.kind = Kind::Generator;
  e.generator = i;
  return e;
}

Expr Expr::norm2() {
  Expr e;
  e.kind = Kind::Norm2;
  return e;
}

Expr Expr::rational(Rational v) {
  Expr e;
  e.kind = Kind::Rational;
  e.value = std::move(v);
  return e;
}

Expr Expr::imaginary_unit() {
  Expr e;
  e.kind = Kind::ImaginaryUnit;
  return e;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Sum:
      return a.negated == b.negated && a.children == b.children;
    case Expr::Kind::Product:
      return a.children == b.children;
    case Expr::Kind::Power:
      return a.exponent == b.exponent && a.children == b.children;
    case Expr::Kind::Generator:
      return a.generator == b.generator;
    case Expr::Kind::Rational:
      return a.value == b.value;
    case Expr::Kind::Norm2:
    case Expr::Kind::ImaginaryUnit:
      return true;
  }
  return false;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse() {
    Expr e = expr();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(ErrorCode::SyntaxError, pos_, what);
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool peek_digit() const {
    return pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]));
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (peek_digit()) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(src_.substr(start, pos_ - start));
  }

  Expr expr() {
    std::vector<Expr> terms;
    std::vector<bool> negated;
    terms.push_back(term());
    negated.push_back(false);
    while (peek('+') || peek('-')) {
      negated.push_back(src_[pos_] == '-');
      ++pos_;
      terms.push_back(term());
    }
    if (terms.size() == 1) return std::move(terms.front());
    return Expr::sum(std::move(terms), std::move(negated));
  }

  Expr term() {
    std::vector<Expr> factors;
    factors.push_back(factor());
    while (peek('*')) {
      ++pos_;
      factors.push_back(factor());
    }
    if (factors.size() == 1) return std::move(factors.front());
    return Expr::product(std::move(factors));
  }

  Expr factor() {
    Expr base = atom();
    if (!peek('^')) return base;
    ++pos_;
    skip_space();
    const std::size_t at = pos_;
    if (pos_ < src_.size() && src_[pos_] == '-') {
      throw ParseError(ErrorCode::ExponentNegative, at, "negative exponent");
    }
    const Integer value(digits());
    if (value > kMaxExponent) {
      throw ParseError(ErrorCode::SyntaxError, at, "exponent too large");
    }
    return Expr::power(std::move(base), static_cast<std::uint32_t>(value.get_ui()));
  }

  Expr atom() {
    skip_space();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      const std::string_view word = src_.substr(start, pos_ - start);
      if (word == "E1") return Expr::gen(0);
      if (word == "E2") return Expr::gen(1);
      if (word == "E3") return Expr::gen(2);
      if (word == "norm2") return Expr::norm2();
      if (word == "i") return Expr::imaginary_unit();
      pos_ = start;
      fail("unknown symbol '" + std::string(word) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Expr rational() {
    bool negative = false;
    if (src_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    Integer num(digits());
    Integer den(1);
    if (pos_ < src_.size() && src_[pos_] == '/') {
      ++pos_;
      const std::size_t at = pos_;
      den = Integer(digits());
      if (sgn(den) == 0) throw ParseError(ErrorCode::SyntaxError, at, "zero denominator");
    }
    if (negative) num = -num;
    return Expr::rational(make_rational(num, den));
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

bool is_compound(const Expr& e) {
  return e.kind == Expr::Kind::Sum || e.kind == Expr::Kind::Product ||
         e.kind == Expr::Kind::Power;
}

std::string parenthesized(const Expr& e) { return "(" + print_expr(e) + ")"; }

}  // namespace

Expr parse_expr(std::string_view src) { return Parser(src).parse(); }

std::string print_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Sum: {
      std::string out;
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        if (k > 0) out += e.negated[k] ? " - " : " + ";
        const Expr& child = e.children[k];
        out += child.kind == Expr::Kind::Sum ? parenthesized(child) : print_expr(child);
      }
      return out;
    }
    case Expr::Kind::Product: {
      std::string out;
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        if (k > 0) out += " * ";
        const Expr& child = e.children[k];
        const bool wrap = child.kind == Expr::Kind::Sum || child.kind == Expr::Kind::Product;
        out += wrap ? parenthesized(child) : print_expr(child);
      }
      return out;
    }
    case Expr::Kind::Power: {
      const Expr& base = e.children.front();
      const bool wrap = is_compound(base) || base.kind == Expr::Kind::Rational;
      return (wrap ? parenthesized(base) : print_expr(base)) + "^" + std::to_string(e.exponent);
    }
    case Expr::Kind::Generator:
      return "E" + std::to_string(e.generator + 1);
    case Expr::Kind::Norm2:
      return "norm2";
    case Expr::Kind::Rational:
      return to_display(e.value);
    case Expr::Kind::ImaginaryUnit:
      return "i";
  }
  return {};
}

SymPoly lower(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Sum: {
      SymPoly out;
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        if (e.negated[k]) {
          out -= lower(e.children[k]);
        } else {
          out += lower(e.children[k]);
        }
      }
      return out;
    }
    case Expr::Kind::Product: {
      SymPoly out = SymPoly::constant(1);
      for (const Expr& child : e.children) out *= lower(child);
      return out;
    }
    case Expr::Kind::Power:
      return pow(lower(e.children.front()), e.exponent);
    case Expr::Kind::Generator:
      return SymPoly::generator(e.generator);
    case Expr::Kind::Norm2:
      return norm_sq();
    case Expr::Kind::Rational:
      return SymPoly::constant(GaussRat(e.value));
    case Expr::Kind::ImaginaryUnit:
      return SymPoly::constant(GaussRat::imaginary_unit());
  }
  return {};
}

}  // namespace duflo
