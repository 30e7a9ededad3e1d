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

#include "duflo/expmap/mat4_series.hpp"
#include "duflo/quantmaps/map_kind.hpp"

namespace duflo {

/// Q[exp(-8 pi i/k kappa^{ij} E_i T_j)] in spin 1/2 as a series in u = pi/k.
/// T_j acts on the (A, D) slot, the quantized fluxes on the (C, B) slot.
/// Orders are evaluated concurrently. Throws Error(InvalidArgument) when
/// order == 0.
Mat4Series quantized_exp(MapKind kind, std::size_t order);

/// The same element through the anticommutator reduction
///   sum_p z^p/p! tau^{i_1}...tau^{i_p} (x) Q(E_{i_1}...E_{i_p})
///     = sum_k z^{2k}/(2k)! 2^{-k} 1 (x) Q(||E||^{2k})
///       + z^{2k+1}/(2k+1)! 2^{-k} tau^i (x) Q(||E||^{2k} E_i)
/// with z = 4 i u.
Mat4Series noui_cross_series(MapKind kind, std::size_t order);

}  // namespace duflo
