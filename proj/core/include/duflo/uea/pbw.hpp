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
#include <map>
#include <memory>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "duflo/liesym/lie_data.hpp"
#include "duflo/uea/uea_elem.hpp"

namespace duflo {

/// Normal-ordering arithmetic in U(g) for a 3-dimensional Lie algebra.
///
/// Products are reduced by moving one generator at a time across a PBW
/// monomial, rewriting each out-of-order pair Ê_j Ê_i (j > i) as
/// Ê_i Ê_j + f_{ji}^k Ê_k. The normal form of "monomial times generator" (on
/// either side) is memoised. Caches are filled idempotently under a
/// shared_mutex, so one instance may be used from several threads.
class PbwAlgebra {
 public:
  explicit PbwAlgebra(LieData lie);
  PbwAlgebra(const PbwAlgebra&) = delete;
  PbwAlgebra& operator=(const PbwAlgebra&) = delete;

  static const PbwAlgebra& su2();

  const LieData& lie() const noexcept { return lie_; }

  UEAElem multiply(const UEAElem& x, const UEAElem& y) const;
  /// Ê_i * x.
  UEAElem left_multiply(std::size_t i, const UEAElem& x) const;
  /// x * Ê_i.
  UEAElem right_multiply(const UEAElem& x, std::size_t i) const;
  UEAElem commutator(const UEAElem& x, const UEAElem& y) const;
  UEAElem power(const UEAElem& x, unsigned n) const;

  /// Delta = kappa^{ij} Ê_i Ê_j.
  UEAElem casimir() const;
  UEAElem casimir_power(unsigned m) const;

  /// True iff x commutes with every generator.
  bool is_central(const UEAElem& x) const;

  /// Coefficients c_m with x = sum_m c_m Delta^m, found by greedy
  /// leading-degree elimination. Throws Error(NotCentral) or
  /// Error(NotPolynomialInCasimir).
  std::vector<GaussRat> center_decompose(const UEAElem& x) const;
  UEAElem from_casimir_polynomial(const std::vector<GaussRat>& coeffs) const;

 private:
  using Cached = std::shared_ptr<const UEAElem>;

  Cached monomial_times_generator(const Exponent& m, std::size_t i) const;
  Cached generator_times_monomial(std::size_t i, const Exponent& m) const;

  LieData lie_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::pair<Exponent, std::size_t>, Cached> right_cache_;
  mutable std::map<std::pair<std::size_t, Exponent>, Cached> left_cache_;
  mutable std::vector<UEAElem> casimir_powers_;
};

/// Shorthands for the built-in su(2) algebra.
UEAElem pbw_mul(const UEAElem& x, const UEAElem& y);
UEAElem casimir();
bool is_central(const UEAElem& x);
std::vector<GaussRat> center_decompose(const UEAElem& x);

}  // namespace duflo
