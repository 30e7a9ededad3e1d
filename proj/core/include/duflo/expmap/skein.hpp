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
#include <optional>

#include "duflo/expmap/mat4_series.hpp"
#include "duflo/quantmaps/map_kind.hpp"

namespace duflo {

struct SkeinReport {
  MapKind map;
  std::size_t order;
  Series c1;             // coefficient of delta^A_B delta^C_D
  Series c2;             // coefficient of -epsilon^{AC} epsilon_{BD}
  Series product_check;  // c1 * c2
  bool passes_kauffman;
  std::optional<Series> a_series;  // c2 when the relation holds
};

/// Reads the epsilon-basis coefficients of quantized_exp(kind, order) and
/// tests them against crossing = A (parallel) + A^{-1} (crossed), i.e.
/// c1 c2 == 1. Throws Error(InvalidArgument) when order < 4.
SkeinReport kauffman_check(MapKind kind, std::size_t order);

struct LoopClosures {
  Series parallel;  // contraction with delta^D_A delta^B_C
  Series crossed;   // contraction with delta^B_A delta^D_C
};

LoopClosures loop_closures(const Mat4Series& m);

}  // namespace duflo
