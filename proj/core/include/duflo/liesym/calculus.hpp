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

#include <cstddef>
#include <vector>

#include "duflo/liesym/lie_data.hpp"
#include "duflo/liesym/sym_poly.hpp"

namespace duflo {

/// ||E||^2 = kappa^{ij} E_i E_j.
SymPoly norm_sq(const LieData& lie = LieData::su2());

/// ||E||^{2k}, fully expanded. For su(2) this is (-1/2)^k (E_1^2+E_2^2+E_3^2)^k.
SymPoly norm_sq_power(unsigned k, const LieData& lie = LieData::su2());

/// Formal derivative with respect to E_{i+1}.
SymPoly partial(std::size_t i, const SymPoly& p);

/// Kirillov-Kostant-Souriau bracket {p, q} = f_{ij}^k E_k d^i p d^j q.
SymPoly kks_bracket(const SymPoly& p, const SymPoly& q,
                    const LieData& lie = LieData::su2());

/// ||d||^2 p = kappa_{mn} d^m d^n p.
SymPoly norm_partial_sq(const SymPoly& p, const LieData& lie = LieData::su2());

/// The Duflo factor j^{1/2}(d) for su(2):
///   sum_N 1/((2N+1)! 8^N) ||d||^{2N} p,
/// which terminates once 2N exceeds deg(p). Throws Error(UnsupportedAlgebra)
/// for any other algebra, since the series above uses the su(2) eigenvalues of
/// ad_x.
SymPoly jhalf_apply(const SymPoly& p, const LieData& lie = LieData::su2());

/// Coefficient of ||E||^{2(k-N)} E_i in j^{1/2}(d)[||E||^{2k} E_i] for
/// N = 0..min(k, max_terms - 1), straight from the closed formula.
std::vector<Rational> diffop_closed(unsigned k, unsigned max_terms);
inline std::vector<Rational> diffop_closed(unsigned k) {
  return diffop_closed(k, k + 1);
}

}  // namespace duflo
