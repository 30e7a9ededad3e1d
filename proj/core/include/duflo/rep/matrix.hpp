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
#include <cstddef>

#include "duflo/numeric/gauss_rat.hpp"

namespace duflo {

/// Dense N x N matrix over the Gaussian rationals, row-major.
template <std::size_t N>
class SquareMatrix {
 public:
  static constexpr std::size_t kSize = N;

  SquareMatrix() = default;

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1;
    return m;
  }

  GaussRat& operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
  const GaussRat& operator()(std::size_t r, std::size_t c) const { return data_[r * N + c]; }

  GaussRat trace() const {
    GaussRat t;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data_[i] += o.data_[i];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data_[i] -= o.data_[i];
    return *this;
  }
  SquareMatrix& operator*=(const GaussRat& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(SquareMatrix a, const GaussRat& s) { return a *= s; }
  friend SquareMatrix operator*(const GaussRat& s, SquareMatrix a) { return a *= s; }
  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix out;
    for (std::size_t r = 0; r < N; ++r) {
      for (std::size_t k = 0; k < N; ++k) {
        if (a(r, k).is_zero()) continue;
        for (std::size_t c = 0; c < N; ++c) out(r, c) += a(r, k) * b(k, c);
      }
    }
    return out;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::array<GaussRat, N * N> data_{};
};

using Mat2 = SquareMatrix<2>;

/// Operators on the two-fold tensor product. Row index (A, C) -> 2A + C and
/// column index (D, B) -> 2D + B, so an element X^A_D Y^C_B is the Kronecker
/// product kron(X, Y).
using Mat4 = SquareMatrix<4>;

inline Mat4 kron(const Mat2& x, const Mat2& y) {
  Mat4 out;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t d = 0; d < 2; ++d) {
      if (x(a, d).is_zero()) continue;
      for (std::size_t c = 0; c < 2; ++c) {
        for (std::size_t b = 0; b < 2; ++b) out(2 * a + c, 2 * d + b) = x(a, d) * y(c, b);
      }
    }
  }
  return out;
}

inline GaussRat element(const Mat4& m, std::size_t a, std::size_t c, std::size_t d,
                        std::size_t b) {
  return m(2 * a + c, 2 * d + b);
}

}  // namespace duflo
