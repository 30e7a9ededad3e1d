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

#include "duflo/expmap/quantized.hpp"

#include <future>
#include <vector>

#include "duflo/error.hpp"
#include "duflo/expmap/classical.hpp"
#include "duflo/liesym/calculus.hpp"
#include "duflo/quantmaps/quantize.hpp"
#include "duflo/rep/spin_half.hpp"

namespace duflo {

Mat4Series quantized_exp(MapKind kind, std::size_t order) {
  const GradedClassicalExp classical = classical_exp_series(order);
  std::vector<std::future<Mat4>> pending;
  pending.reserve(order);
  for (std::size_t n = 0; n < order; ++n) {
    pending.push_back(std::async(std::launch::async, [kind, &slot = classical.terms[n]] {
      Mat4 m = kron(Mat2::identity(), rep_half(q_extended(kind, slot.identity)));
      for (std::size_t i = 0; i < 3; ++i) {
        if (slot.generator[i].is_zero()) continue;
        m += kron(tau(i), rep_half(q_extended(kind, slot.generator[i])));
      }
      return m;
    }));
  }
  Mat4Series out(order);
  for (std::size_t n = 0; n < order; ++n) out[n] = pending[n].get();
  return out;
}

Mat4Series noui_cross_series(MapKind kind, std::size_t order) {
  if (order == 0) throw Error(ErrorCode::InvalidArgument, "order must be at least 1");
  const GaussRat z(Rational(0), Rational(4));
  Mat4Series out(order);
  Rational inv_factorial(1);
  for (std::size_t p = 0; p < order; ++p) {
    if (p > 0) inv_factorial /= static_cast<unsigned long>(p);
    const auto k = static_cast<unsigned>(p / 2);
    const GaussRat weight = pow(z, static_cast<unsigned>(p)) *
                            GaussRat(Rational(inv_factorial / pow(Rational(2), k)));
    const SymPoly radial = norm_sq_power(k);
    Mat4 m;
    if (p % 2 == 0) {
      m = kron(Mat2::identity(), rep_half(q_extended(kind, radial)));
    } else {
      for (std::size_t i = 0; i < 3; ++i) {
        m += kron(tau(i), rep_half(q_extended(kind, radial * SymPoly::generator(i))));
      }
    }
    out[p] = m * weight;
  }
  return out;
}

}  // namespace duflo
