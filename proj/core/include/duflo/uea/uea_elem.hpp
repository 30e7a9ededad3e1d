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

/// Element of U(g) in the PBW basis: exponent (a, b, c) stands for the
/// ordered monomial Ê_1^a Ê_2^b Ê_3^c. Unordered words are not expressible;
/// products go through PbwAlgebra.
class UEAElem : public LinearCombination<UEAElem> {
 public:
  using LinearCombination::LinearCombination;

  static UEAElem generator(std::size_t i) { return monomial(unit_exponent(i)); }
};

/// Plain text in PBW order, e.g. "-1/2 Ê1^2 - 1/2 Ê2^2 + 1/8".
std::string to_text(const UEAElem& x);
/// LaTeX, e.g. "\hat{E}_1^{2}\hat{E}_3".
std::string to_latex(const UEAElem& x);

}  // namespace duflo
