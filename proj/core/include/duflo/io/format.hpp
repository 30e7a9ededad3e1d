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

#include <iosfwd>
#include <string>
#include <vector>

#include "duflo/liesym/sym_poly.hpp"
#include "duflo/numeric/series.hpp"
#include "duflo/rep/matrix.hpp"
#include "duflo/uea/uea_elem.hpp"

namespace duflo {

std::string to_text(const Series& s);
std::string to_latex(const Series& s);

/// "Δ^2 + 1/4 Δ + 1/64" for coefficients in ascending powers of Delta.
std::string casimir_polynomial_text(const std::vector<GaussRat>& coeffs);
std::string casimir_polynomial_latex(const std::vector<GaussRat>& coeffs);

/// "[[a, b], [c, d]]".
std::string to_text(const Mat2& m);
std::string to_latex(const Mat2& m);

std::ostream& operator<<(std::ostream& os, const Series& s);
std::ostream& operator<<(std::ostream& os, const SymPoly& p);
std::ostream& operator<<(std::ostream& os, const UEAElem& x);
std::ostream& operator<<(std::ostream& os, const Mat2& m);

}  // namespace duflo
