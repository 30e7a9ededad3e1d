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
#include "duflo/numeric/bernoulli.hpp"
#include "duflo/uea/pbw.hpp"

namespace duflo {

/// Largest degree q_sym_bruteforce will expand word by word.
inline constexpr unsigned kBruteforceMaxDegree = 9;

/// Symmetric quantization Q_S(E_{i_1}...E_{i_n}) = Ê_{(i_1}...Ê_{i_n)}.
///
/// Evaluated by the first-letter recursion
///   Q_S(m) = sum_i (m_i / n) Ê_i Q_S(m - e_i),
/// memoised on exponent vectors (thread-safe, idempotent fill).
UEAElem q_sym(const SymPoly& p);
UEAElem q_sym(const SymPoly& p, const PbwAlgebra& algebra);

/// Q_S by averaging the normal forms of every distinct word of each monomial.
/// Throws Error(DegreeTooLarge) above kBruteforceMaxDegree.
UEAElem q_sym_bruteforce(const SymPoly& p, const PbwAlgebra& algebra = PbwAlgebra::su2());

/// Q_S(||E||^{2k}) from the Bernoulli-number closed form
///   -(1/8^k) sum_{m=0}^{k} C(2k+1, 2m) B_{2m} (2^{2m} - 2) (1 + 8 Delta)^{k-m}.
UEAElem q_sym_invariant_closed(unsigned k, BernoulliKind kind = BernoulliKind::First);

/// Spin-1/2 value of Q_S(||E||^{2k}) written with the full Bernoulli sums
///   -(1/2^k) sum_{m=0}^{2k} C(2k+1,m) B_m + (1/8^k) sum_{m=0}^{2k} C(2k+1,m) B_m 2^{2k-m+1},
/// where B_1 does enter (and cancels). Should equal (2k+1)/8^k for either
/// Bernoulli convention.
Rational spinhalf_sym_invariant_expanded(unsigned k, BernoulliKind kind);

}  // namespace duflo
