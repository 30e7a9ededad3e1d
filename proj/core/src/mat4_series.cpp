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

#include "duflo/expmap/mat4_series.hpp"

#include <algorithm>

namespace duflo {

Mat4Series Mat4Series::scaled(const Series& s, const Mat4& m) {
  Mat4Series out(s.order());
  for (std::size_t n = 0; n < s.order(); ++n) out.coeffs_[n] = m * s[n];
  return out;
}

Series Mat4Series::entry(std::size_t row, std::size_t col) const {
  Series s(order());
  for (std::size_t n = 0; n < order(); ++n) s[n] = coeffs_[n](row, col);
  return s;
}

Mat4Series& Mat4Series::operator+=(const Mat4Series& o) {
  coeffs_.resize(std::min(order(), o.order()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

Mat4Series& Mat4Series::operator-=(const Mat4Series& o) {
  coeffs_.resize(std::min(order(), o.order()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

}  // namespace duflo
