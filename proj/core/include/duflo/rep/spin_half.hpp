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

#include "duflo/rep/matrix.hpp"
#include "duflo/uea/uea_elem.hpp"

namespace duflo {

/// tau_i = -(i/2) sigma_i for 0-based i. Throws Error(IndexOutOfRange).
Mat2 tau(std::size_t i);

/// Spin-1/2 representation: Ê_1^a Ê_2^b Ê_3^c -> tau_1^a tau_2^b tau_3^c.
Mat2 rep_half(const UEAElem& x);

/// sum_i tau_i (x) tau_i as a Mat4.
Mat4 tensor_sum_tau();

}  // namespace duflo
