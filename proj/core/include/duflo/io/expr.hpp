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

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "duflo/liesym/sym_poly.hpp"
#include "duflo/numeric/rational.hpp"

namespace duflo {

/// Syntax tree of a polynomial expression.
///
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom   := 'E1' | 'E2' | 'E3' | 'norm2' | 'i' | rational | '(' expr ')'
///   rational := '-'? digits ('/' digits)?
///
/// 'norm2' is ||E||^2 = kappa^{ij} E_i E_j. Whitespace is insignificant.
struct Expr {
  enum class Kind { Sum, Product, Power, Generator, Norm2, Rational, ImaginaryUnit };

  Kind kind = Kind::Rational;
  /// Sum: one sign per child, true for subtraction.
  std::vector<bool> negated;
  std::vector<Expr> children;
  std::uint32_t exponent = 0;  // Power
  std::size_t generator = 0;   // Generator, 0-based
  Rational value;              // Rational

  static Expr sum(std::vector<Expr> terms, std::vector<bool> negated);
  static Expr product(std::vector<Expr> factors);
  static Expr power(Expr base, std::uint32_t exponent);
  static Expr gen(std::size_t i);
  static Expr norm2();
  static Expr rational(Rational v);
  static Expr imaginary_unit();

  friend bool operator==(const Expr& a, const Expr& b);
};

/// Throws ParseError with code SyntaxError or ExponentNegative.
Expr parse_expr(std::string_view src);

/// Canonical source text; parse_expr(print_expr(e)) == e.
std::string print_expr(const Expr& e);

SymPoly lower(const Expr& e);

inline SymPoly parse_polynomial(std::string_view src) { return lower(parse_expr(src)); }

}  // namespace duflo
