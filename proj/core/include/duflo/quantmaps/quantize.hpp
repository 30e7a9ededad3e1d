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

#include "duflo/liesym/sym_poly.hpp"
#include "duflo/quantmaps/map_kind.hpp"
#include "duflo/uea/uea_elem.hpp"

namespace duflo {

/// Q_D = Q_S o j^{1/2}(d).
UEAElem q_duflo(const SymPoly& p);

/// Applies the chosen map. sym and duflo accept any polynomial; duflo-mod,
/// sym-mod and npp are defined on the radial subspace only and send
///   ||E||^{2k}     -> I_k
///   ||E||^{2k} E_i -> I_k Ê_i
/// with I_k = Q_D(||E||^{2k}), Q_S(||E||^{2k}) or 1/8^k respectively.
/// Throws Error(NotRadial) for non-radial input to the module maps.
UEAElem q_extended(MapKind kind, const SymPoly& p);

/// Scalar s with Pi(Q_D(||E||^{2k})) = s 1 (with_generator = false) or
/// Pi(Q_D(||E||^{2k} E_i)) = s tau_i (with_generator = true) in spin 1/2.
GaussRat duflo_closed_spinhalf(unsigned k, bool with_generator);

/// Checks Q_S(||E||^{2(n+1)}) = kappa^{ij} Q_S(||E||^{2n} E_i) Ê_j exactly.
/// Throws Error(DegreeTooLarge) for n > 4.
bool ngivia_gi_check(unsigned n);

/// Q_S(||E||^{2n} E_i) reconstructed as [Q_S(||E||^{2(n+1)}) / Delta] Ê_i,
/// dividing the Casimir polynomial exactly.
UEAElem q_sym_vector_via_casimir(unsigned n, std::size_t i);

}  // namespace duflo
