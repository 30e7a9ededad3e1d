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

#include <gtest/gtest.h>

#include <random>

#include "duflo/error.hpp"
#include "duflo/expmap/skein.hpp"
#include "duflo/io/expr.hpp"
#include "duflo/io/format.hpp"
#include "duflo/io/json.hpp"
#include "duflo/liesym/calculus.hpp"
#include "duflo/quantmaps/quantize.hpp"
#include "duflo/rep/spin_half.hpp"
#include "duflo/uea/pbw.hpp"
#include "duflo/verify/acceptance.hpp"

namespace duflo {
namespace {

const GaussRat kI = GaussRat::imaginary_unit();
SymPoly E(std::size_t i) { return SymPoly::generator(i); }

ErrorCode parse_error_code(std::string_view src, std::size_t* position = nullptr) {
  try {
    parse_expr(src);
  } catch (const ParseError& e) {
    if (position) *position = e.position();
    return e.code();
  }
  ADD_FAILURE() << "no error for '" << src << "'";
  return ErrorCode::InvalidArgument;
}

TEST(Parser, Examples) {
  EXPECT_EQ(parse_polynomial("norm2^2 * E1"), norm_sq_power(2) * E(0));
  EXPECT_EQ(parse_polynomial("1/2 * E1*E2 - i*E3"),
            GaussRat(make_rational(1, 2)) * E(0) * E(1) - kI * E(2));
  EXPECT_EQ(parse_error_code("E1^-1"), ErrorCode::ExponentNegative);
}

TEST(Parser, WhitespaceAndPrecedence) {
  EXPECT_EQ(parse_polynomial("  E1 +E2*E3 ^2 "), E(0) + E(1) * E(2) * E(2));
  EXPECT_EQ(parse_polynomial("(E1 + E2)^2"), pow(E(0) + E(1), 2));
  EXPECT_EQ(parse_polynomial("E1 - E2 - E3"), E(0) - E(1) - E(2));
  EXPECT_EQ(parse_polynomial("-3/6 * norm2"), GaussRat(make_rational(-1, 2)) * norm_sq());
  EXPECT_EQ(parse_polynomial("E1^0"), SymPoly::constant(1));
  EXPECT_EQ(parse_polynomial("i^2"), SymPoly::constant(-1));
}

TEST(Parser, SyntaxErrorsCarryPositions) {
  std::size_t pos = 0;
  EXPECT_EQ(parse_error_code("E1 +", &pos), ErrorCode::SyntaxError);
  EXPECT_EQ(pos, 4U);
  EXPECT_EQ(parse_error_code("E4", &pos), ErrorCode::SyntaxError);
  EXPECT_EQ(pos, 0U);
  EXPECT_EQ(parse_error_code("(E1", &pos), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error_code("E1 E2"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error_code(""), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error_code("1/0"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error_code("E1^99999"), ErrorCode::SyntaxError);
}

TEST(Printer, CanonicalForms) {
  EXPECT_EQ(print_expr(parse_expr("norm2^2*E1")), "norm2^2 * E1");
  EXPECT_EQ(print_expr(parse_expr("(E1+E2)*E3 - 1/2")), "(E1 + E2) * E3 - 1/2");
  EXPECT_EQ(print_expr(parse_expr("(E1)")), "E1");
}

TEST(Printer, RoundTripsRandomTrees) {
  std::mt19937_64 rng(42);
  for (int n = 0; n < 500; ++n) {
    const Expr tree = random_expr(rng, 5);
    const std::string text = print_expr(tree);
    ASSERT_EQ(parse_expr(text), tree) << text;
    ASSERT_EQ(print_expr(parse_expr(text)), text);
  }
}

TEST(Text, Polynomials) {
  EXPECT_EQ(to_text(E(0) * E(0) * E(2) - SymPoly::constant(GaussRat(make_rational(1, 2)))), "E1^2 E3 - 1/2");
  EXPECT_EQ(to_text(SymPoly()), "0");
  EXPECT_EQ(to_text(q_duflo(norm_sq())), "-1/2 Ê1^2 - 1/2 Ê2^2 - 1/2 Ê3^2 + 1/8");
  EXPECT_EQ(to_latex(UEAElem::monomial({2, 0, 1})), "\\hat{E}_1^{2}\\hat{E}_3");
  EXPECT_EQ(to_latex(E(1)), "E_2");
}

TEST(Text, CasimirPolynomials) {
  EXPECT_EQ(casimir_polynomial_text(center_decompose(q_duflo(norm_sq()))), "Δ + 1/8");
  EXPECT_EQ(casimir_polynomial_text({make_rational(1, 64), make_rational(1, 4), 1}), "Δ^2 + 1/4 Δ + 1/64");
  EXPECT_EQ(casimir_polynomial_text({}), "0");
}

TEST(Text, Series) {
  EXPECT_EQ(to_text(Series{1, 0, make_rational(-1, 2)}), "1 - 1/2 u^2 + O(u^3)");
  EXPECT_EQ(to_text(Series{0, kI}), "i u + O(u^2)");
}

TEST(Json, Scalars) {
  EXPECT_EQ(to_json(make_rational(-3, 6)).dump(), "\"-1/2\"");
  EXPECT_EQ(to_json(Rational(2)).dump(), "\"2/1\"");
  EXPECT_EQ(to_json(GaussRat(1, make_rational(1, 3))).dump(), R"({"re":"1/1","im":"1/3"})");
  EXPECT_EQ(rational_from_json(Json("4/6")), make_rational(2, 3));
  EXPECT_THROW(rational_from_json(Json(0.5)), Error);
}

TEST(Json, PolynomialRecordsAreSorted) {
  const SymPoly p = E(2) + GaussRat(2) * E(0) * E(0);
  const Json j = to_json(p);
  ASSERT_EQ(j.size(), 2U);
  EXPECT_EQ(j[0]["exp"], Json::parse("[0,0,1]"));
  EXPECT_EQ(j[1]["exp"], Json::parse("[2,0,0]"));
  EXPECT_EQ(j[1]["coeff"]["re"], "2/1");
  EXPECT_EQ(to_json(casimir())[0].count("pbw"), 1U);
}

TEST(Json, RoundTrips) {
  const SymPoly p = norm_sq_power(2) * E(1) + kI * E(2);
  EXPECT_EQ(sym_poly_from_json(to_json(p)), p);
  const UEAElem x = q_duflo(norm_sq_power(2));
  EXPECT_EQ(uea_from_json(to_json(x)), x);
  const Series s{1, kI, make_rational(-7, 3)};
  EXPECT_EQ(series_from_json(to_json(s)), s);
  const GaussRat z(make_rational(-5, 7), make_rational(3, 2));
  EXPECT_EQ(gauss_rat_from_json(to_json(z)), z);
}

TEST(Json, Matrices) {
  const Json t = to_json(tau(2));
  ASSERT_EQ(t.size(), 2U);
  EXPECT_EQ(t[0][0]["im"], "-1/2");
  EXPECT_EQ(t[1][1]["im"], "1/2");
  EXPECT_EQ(to_json(Mat4::identity())[3].size(), 4U);
}

TEST(Json, SkeinReportShape) {
  const Json j = to_json(kauffman_check(MapKind::Npp, 6));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"map", "order", "basis", "c1", "c2", "product_check",
                                            "passes_kauffman", "A"}));
  EXPECT_EQ(j["map"], "npp");
  EXPECT_EQ(j["basis"], "epsilon");
  EXPECT_TRUE(j["passes_kauffman"].get<bool>());
  EXPECT_EQ(j["A"].size(), 6U);
  EXPECT_TRUE(to_json(kauffman_check(MapKind::Duflo, 6))["A"].is_null());
}

}  // namespace
}  // namespace duflo
