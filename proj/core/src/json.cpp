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

#include "duflo/io/json.hpp"

#include "duflo/error.hpp"
#include "duflo/quantmaps/map_kind.hpp"

namespace duflo {
namespace {

Json exponent_json(const Exponent& e) { return Json::array({e[0], e[1], e[2]}); }

Exponent exponent_from_json(const Json& j) {
  if (!j.is_array() || j.size() != kRank) {
    throw Error(ErrorCode::InvalidArgument, "exponent must be an array of 3 integers");
  }
  Exponent e{};
  for (std::size_t i = 0; i < kRank; ++i) e[i] = j.at(i).get<std::uint32_t>();
  return e;
}

template <typename Poly>
Json terms_json(const Poly& p, const char* key) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json rec;
    rec[key] = exponent_json(e);
    rec["coeff"] = to_json(c);
    out.push_back(std::move(rec));
  }
  return out;
}

template <typename Poly>
Poly terms_from_json(const Json& j, const char* key) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, "expected an array of terms");
  Poly p;
  for (const auto& rec : j) p.add_term(exponent_from_json(rec.at(key)), gauss_rat_from_json(rec.at("coeff")));
  return p;
}

template <std::size_t N>
Json matrix_json(const SquareMatrix<N>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < N; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < N; ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json to_json(const Rational& r) { return to_wire(r); }

Json to_json(const GaussRat& z) {
  Json j;
  j["re"] = to_wire(z.re());
  j["im"] = to_wire(z.im());
  return j;
}

Json to_json(const Series& s) {
  Json out = Json::array();
  for (const auto& c : s.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const SymPoly& p) { return terms_json(p, "exp"); }
Json to_json(const UEAElem& x) { return terms_json(x, "pbw"); }
Json to_json(const Mat2& m) { return matrix_json(m); }
Json to_json(const Mat4& m) { return matrix_json(m); }

Json to_json(const SkeinReport& r) {
  Json j;
  j["map"] = std::string(to_string(r.map));
  j["order"] = r.order;
  j["basis"] = "epsilon";
  j["c1"] = to_json(r.c1);
  j["c2"] = to_json(r.c2);
  j["product_check"] = to_json(r.product_check);
  j["passes_kauffman"] = r.passes_kauffman;
  j["A"] = r.a_series ? to_json(*r.a_series) : Json(nullptr);
  return j;
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw Error(ErrorCode::InvalidArgument, "rational must be a string");
  return parse_rational(j.get<std::string>());
}

GaussRat gauss_rat_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "complex value must be an object");
  return GaussRat(rational_from_json(j.at("re")), rational_from_json(j.at("im")));
}

Series series_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidArgument, "series must be an array");
  std::vector<GaussRat> c;
  for (const auto& x : j) c.push_back(gauss_rat_from_json(x));
  return Series(std::move(c));
}

SymPoly sym_poly_from_json(const Json& j) { return terms_from_json<SymPoly>(j, "exp"); }
UEAElem uea_from_json(const Json& j) { return terms_from_json<UEAElem>(j, "pbw"); }

}  // namespace duflo
