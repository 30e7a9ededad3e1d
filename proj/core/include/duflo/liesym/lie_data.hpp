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

#include "duflo/numeric/rational.hpp"

namespace duflo {

/// Structure constants f_{ij}^k of a finite-dimensional Lie algebra together
/// with its Killing form kappa_{mn} = f_{mk}^l f_{nl}^k and the inverse form.
class LieData {
 public:
  /// Builds from f given as f[(i*dim + j)*dim + k]. Throws
  /// Error(InvalidArgument) if f is not antisymmetric, violates Jacobi, or
  /// has a degenerate Killing form.
  LieData(std::size_t dim, std::vector<Rational> f);

  /// su(2) with f_{ij}^k = epsilon_{ijk}.
  static const LieData& su2();

  std::size_t dim() const noexcept { return dim_; }
  const Rational& f(std::size_t i, std::size_t j, std::size_t k) const {
    return f_[(i * dim_ + j) * dim_ + k];
  }
  const Rational& kappa(std::size_t m, std::size_t n) const {
    return kappa_[m * dim_ + n];
  }
  const Rational& kappa_inv(std::size_t m, std::size_t n) const {
    return kappa_inv_[m * dim_ + n];
  }

  /// Largest |sum_m (f_{ij}^m f_{mk}^l + cyclic)| over all i,j,k,l; zero for
  /// a Lie algebra.
  Rational jacobi_defect() const;

  bool is_su2() const;

  friend bool operator==(const LieData& a, const LieData& b) {
    return a.dim_ == b.dim_ && a.f_ == b.f_;
  }

 private:
  std::size_t dim_;
  std::vector<Rational> f_;
  std::vector<Rational> kappa_;
  std::vector<Rational> kappa_inv_;
};

}  // namespace duflo
