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

#include <array>
#include <cstddef>
#include <vector>

#include "duflo/liesym/sym_poly.hpp"

namespace duflo {

/// P 1 + sum_i P_i T_i with polynomial coefficients, where T_i are the
/// spin-1/2 generators acting on the flux-side indices.
struct SlotPoly {
  SymPoly identity;
  std::array<SymPoly, 3> generator;

  friend bool operator==(const SlotPoly&, const SlotPoly&) = default;
};

/// Product in S(g) (x) Mat2 restricted to span{1, T_i}, using the
/// multiplication table of the tau matrices.
SlotPoly operator*(const SlotPoly& a, const SlotPoly& b);

/// exp(-8 i u kappa^{ij} E_i T_j) graded by powers of u: terms[n] is the
/// coefficient of u^n.
struct GradedClassicalExp {
  std::vector<SlotPoly> terms;
};

/// Expands the exponential by repeated multiplication of the exponent.
/// Throws Error(InvalidArgument) when order == 0.
GradedClassicalExp classical_exp_series(std::size_t order);

}  // namespace duflo
