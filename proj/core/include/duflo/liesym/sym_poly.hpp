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

#include <string>

#include "duflo/liesym/linear_combination.hpp"

namespace duflo {

/// Polynomial in the commuting generators E_1, E_2, E_3: an element of the
/// symmetric algebra S(g).
class SymPoly : public LinearCombination<SymPoly> {
 public:
  using LinearCombination::LinearCombination;

  /// E_{i+1} for 0-based i.
  static SymPoly generator(std::size_t i) { return monomial(unit_exponent(i)); }

  SymPoly& operator*=(const SymPoly& o);
  using LinearCombination::operator*=;
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    SymPoly out = a;
    out *= b;
    return out;
  }

  bool is_homogeneous(unsigned d) const;
};

SymPoly pow(const SymPoly& p, unsigned exp);

/// Plain text, e.g. "1/2 E1^2 E3 - i E2".
std::string to_text(const SymPoly& p);
/// LaTeX, e.g. "\frac{1}{2} E_1^{2} E_3".
std::string to_latex(const SymPoly& p);

}  // namespace duflo
