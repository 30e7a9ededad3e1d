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

#include <string_view>
#include <utility>

#include "duflo/expmap/mat4_series.hpp"

namespace duflo {

/// delta^A_D delta^C_B (the identity in the Mat4 convention).
Mat4 delta_ad_cb();
/// delta^A_B delta^C_D (the Kronecker swap in the Mat4 convention).
Mat4 delta_ab_cd();
/// -epsilon^{AC} epsilon_{BD} with epsilon^{12} = epsilon_{12} = 1.
Mat4 minus_eps_eps();

/// Coefficients (c1, c2) with m = c1 b1 + c2 b2, solved through the Gram
/// matrix of the entrywise pairing. Throws Error(ResidualNotInSpan) if m has a
/// component outside span{b1, b2}.
std::pair<Series, Series> decompose_in_span(const Mat4Series& m, const Mat4& b1,
                                            const Mat4& b2);

struct PauliDecomposition {
  Series alpha;  // coefficient of 1 (x) 1
  Series beta;   // coefficient of sum_i tau_i (x) tau_i
};

PauliDecomposition decompose_pauli(const Mat4Series& m);

enum class IntertwinerBasis {
  Epsilon,  // {delta^A_B delta^C_D, -epsilon^{AC} epsilon_{BD}}
  Swap,     // {delta^A_B delta^C_D, delta^A_D delta^C_B}
};

std::string_view to_string(IntertwinerBasis basis);
IntertwinerBasis parse_intertwiner_basis(std::string_view name);

std::pair<Series, Series> to_intertwiner(const Mat4Series& m, IntertwinerBasis basis);

/// Epsilon-basis coefficients rewritten in the swap basis using
/// -epsilon epsilon = delta^A_D delta^C_B - delta^A_B delta^C_D.
std::pair<Series, Series> epsilon_to_swap(const std::pair<Series, Series>& eps);

}  // namespace duflo
