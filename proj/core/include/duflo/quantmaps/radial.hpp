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
#include <vector>

#include "duflo/liesym/sym_poly.hpp"

namespace duflo {

/// p = sum_k even[k] ||E||^{2k} + sum_{k,i} odd[i][k] ||E||^{2k} E_i.
/// Trailing zero coefficients are trimmed.
struct RadialDecomposition {
  std::vector<GaussRat> even;
  std::array<std::vector<GaussRat>, 3> odd;

  friend bool operator==(const RadialDecomposition&, const RadialDecomposition&) = default;
};

/// Solves for the radial coefficients degree by degree (triangular in the
/// leading monomials). Throws Error(NotRadial) if p is outside the span of
/// {||E||^{2k}, ||E||^{2k} E_i}.
RadialDecomposition classify_radial(const SymPoly& p);

SymPoly reassemble(const RadialDecomposition& r);

}  // namespace duflo
