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

#include "duflo/rep/spin_half.hpp"

#include "duflo/error.hpp"
#include "duflo/liesym/exponent.hpp"

namespace duflo {

Mat2 tau(std::size_t i) {
  const GaussRat half(make_rational(1, 2));
  const GaussRat i_half(Rational(0), make_rational(1, 2));
  Mat2 m;
  switch (i) {
    case 0:
      m(0, 1) = -i_half;
      m(1, 0) = -i_half;
      break;
    case 1:
      m(0, 1) = -half;
      m(1, 0) = half;
      break;
    case 2:
      m(0, 0) = -i_half;
      m(1, 1) = i_half;
      break;
    default:
      throw Error(ErrorCode::IndexOutOfRange, "tau index must be 0, 1 or 2");
  }
  return m;
}

namespace {

Mat2 matrix_power(const Mat2& m, unsigned n) {
  Mat2 out = Mat2::identity();
  for (unsigned r = 0; r < n; ++r) out = out * m;
  return out;
}

}  // namespace

Mat2 rep_half(const UEAElem& x) {
  Mat2 out;
  for (const auto& [e, c] : x.terms()) {
    Mat2 term = Mat2::identity();
    for (std::size_t i = 0; i < kRank; ++i) {
      // tau_i^2 = -1/4, so only the parity of the exponent needs a matrix.
      term = term * matrix_power(tau(i), e[i] % 2);
      term *= pow(GaussRat(make_rational(-1, 4)), e[i] / 2);
    }
    out += term * c;
  }
  return out;
}

Mat4 tensor_sum_tau() {
  Mat4 out;
  for (std::size_t i = 0; i < kRank; ++i) out += kron(tau(i), tau(i));
  return out;
}

}  // namespace duflo
