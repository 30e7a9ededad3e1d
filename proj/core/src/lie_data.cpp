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

#include "duflo/liesym/lie_data.hpp"

#include <algorithm>
#include <string>

#include "duflo/error.hpp"

namespace duflo {
namespace {

// Gauss-Jordan inverse of a dense square rational matrix; empty on failure.
std::vector<Rational> invert(std::size_t n, std::vector<Rational> a) {
  std::vector<Rational> inv(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a[pivot * n + col]) == 0) ++pivot;
    if (pivot == n) return {};
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[pivot * n + j], a[col * n + j]);
        std::swap(inv[pivot * n + j], inv[col * n + j]);
      }
    }
    const Rational scale = 1 / a[col * n + col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col * n + j] *= scale;
      inv[col * n + j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r * n + col]) == 0) continue;
      const Rational factor = a[r * n + col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r * n + j] -= factor * a[col * n + j];
        inv[r * n + j] -= factor * inv[col * n + j];
      }
    }
  }
  return inv;
}

}  // namespace

LieData::LieData(std::size_t dim, std::vector<Rational> f)
    : dim_(dim), f_(std::move(f)) {
  if (dim_ == 0 || f_.size() != dim_ * dim_ * dim_) {
    throw Error(ErrorCode::InvalidArgument, "structure constants must have dim^3 entries");
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        if (this->f(i, j, k) != -this->f(j, i, k)) {
          throw Error(ErrorCode::InvalidArgument, "structure constants not antisymmetric");
        }
      }
    }
  }
  if (sgn(jacobi_defect()) != 0) {
    throw Error(ErrorCode::InvalidArgument, "structure constants violate the Jacobi identity");
  }
  kappa_.assign(dim_ * dim_, Rational(0));
  for (std::size_t m = 0; m < dim_; ++m) {
    for (std::size_t n = 0; n < dim_; ++n) {
      Rational acc(0);
      for (std::size_t k = 0; k < dim_; ++k) {
        for (std::size_t l = 0; l < dim_; ++l) acc += this->f(m, k, l) * this->f(n, l, k);
      }
      kappa_[m * dim_ + n] = acc;
    }
  }
  kappa_inv_ = invert(dim_, kappa_);
  if (kappa_inv_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "Killing form is degenerate");
  }
}

const LieData& LieData::su2() {
  static const LieData data = [] {
    std::vector<Rational> f(27, Rational(0));
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, long v) {
      f[(i * 3 + j) * 3 + k] = v;
    };
    set(0, 1, 2, 1);
    set(1, 2, 0, 1);
    set(2, 0, 1, 1);
    set(1, 0, 2, -1);
    set(2, 1, 0, -1);
    set(0, 2, 1, -1);
    return LieData(3, std::move(f));
  }();
  return data;
}

Rational LieData::jacobi_defect() const {
  Rational worst(0);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        for (std::size_t l = 0; l < dim_; ++l) {
          Rational acc(0);
          for (std::size_t m = 0; m < dim_; ++m) {
            acc += f(i, j, m) * f(m, k, l) + f(j, k, m) * f(m, i, l) +
                   f(k, i, m) * f(m, j, l);
          }
          if (abs(acc) > worst) worst = abs(acc);
        }
      }
    }
  }
  return worst;
}

bool LieData::is_su2() const { return *this == su2(); }

}  // namespace duflo
