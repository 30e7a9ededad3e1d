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

#include <nlohmann/json.hpp>

#include <utility>
#include <vector>

#include "duflo/expmap/intertwiner.hpp"
#include "duflo/expmap/skein.hpp"
#include "duflo/liesym/sym_poly.hpp"
#include "duflo/numeric/series.hpp"
#include "duflo/rep/matrix.hpp"
#include "duflo/uea/uea_elem.hpp"

namespace duflo {

using Json = nlohmann::ordered_json;

/// "p/q".
Json to_json(const Rational& r);
/// {"re": "p/q", "im": "p/q"}.
Json to_json(const GaussRat& z);
/// Coefficient array in ascending powers.
Json to_json(const Series& s);
/// [{"exp": [a,b,c], "coeff": {...}}, ...] sorted by exponent.
Json to_json(const SymPoly& p);
/// [{"pbw": [a,b,c], "coeff": {...}}, ...] sorted by exponent.
Json to_json(const UEAElem& x);
/// Row-major nested arrays.
Json to_json(const Mat2& m);
Json to_json(const Mat4& m);
Json to_json(const SkeinReport& r);

Rational rational_from_json(const Json& j);
GaussRat gauss_rat_from_json(const Json& j);
Series series_from_json(const Json& j);
SymPoly sym_poly_from_json(const Json& j);
UEAElem uea_from_json(const Json& j);

}  // namespace duflo
