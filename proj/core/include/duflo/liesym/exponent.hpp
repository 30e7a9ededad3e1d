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
#include <cstdint>
#include <numeric>

namespace duflo {

/// Number of generators of su(2) and of every algebra the polynomial
/// machinery supports.
inline constexpr std::size_t kRank = 3;

/// Exponent vector (a, b, c) of E_1^a E_2^b E_3^c, or of the PBW monomial
/// with the same exponents. Generator indices are 0-based in code.
using Exponent = std::array<std::uint32_t, kRank>;

inline unsigned degree(const Exponent& e) {
  return std::accumulate(e.begin(), e.end(), 0U);
}

inline Exponent unit_exponent(std::size_t i) {
  Exponent e{};
  e[i] = 1;
  return e;
}

inline Exponent operator+(Exponent a, const Exponent& b) {
  for (std::size_t i = 0; i < kRank; ++i) a[i] += b[i];
  return a;
}

}  // namespace duflo
