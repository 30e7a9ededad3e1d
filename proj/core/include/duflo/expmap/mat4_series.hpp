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

#include "duflo/numeric/series.hpp"
#include "duflo/rep/matrix.hpp"

namespace duflo {

/// 4x4 matrix of power series in u, stored as a series of Mat4 coefficients
/// so that every entry has the same truncation order.
class Mat4Series {
 public:
  Mat4Series() = default;
  explicit Mat4Series(std::size_t order) : coeffs_(order) {}
  explicit Mat4Series(std::vector<Mat4> coeffs) : coeffs_(std::move(coeffs)) {}

  /// s(u) * m.
  static Mat4Series scaled(const Series& s, const Mat4& m);

  std::size_t order() const noexcept { return coeffs_.size(); }
  const std::vector<Mat4>& coeffs() const noexcept { return coeffs_; }
  const Mat4& operator[](std::size_t n) const { return coeffs_[n]; }
  Mat4& operator[](std::size_t n) { return coeffs_[n]; }

  Series entry(std::size_t row, std::size_t col) const;

  Mat4Series& operator+=(const Mat4Series& o);
  Mat4Series& operator-=(const Mat4Series& o);
  friend Mat4Series operator+(Mat4Series a, const Mat4Series& b) { return a += b; }
  friend Mat4Series operator-(Mat4Series a, const Mat4Series& b) { return a -= b; }

  friend bool operator==(const Mat4Series&, const Mat4Series&) = default;

 private:
  std::vector<Mat4> coeffs_;
};

}  // namespace duflo
