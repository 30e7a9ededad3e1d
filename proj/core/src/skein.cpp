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

#include "duflo/expmap/skein.hpp"

#include <stdexcept>

#include "duflo/error.hpp"
#include "duflo/expmap/intertwiner.hpp"
#include "duflo/expmap/quantized.hpp"

namespace duflo {

SkeinReport kauffman_check(MapKind kind, std::size_t order) {
  if (order < 4) throw Error(ErrorCode::InvalidArgument, "skein check needs order >= 4");
  auto [c1, c2] = to_intertwiner(quantized_exp(kind, order), IntertwinerBasis::Epsilon);
  Series product = c1 * c2;
  const bool passes = product.equals_constant(1);
  std::optional<Series> a;
  if (passes) {
    if (inverse(c2) != c1) throw std::logic_error("c1 * c2 == 1 but c1 != 1/c2");
    a = c2;
  }
  return SkeinReport{kind, order, std::move(c1), std::move(c2), std::move(product), passes,
                     std::move(a)};
}

LoopClosures loop_closures(const Mat4Series& m) {
  Series parallel(m.order());
  Series crossed(m.order());
  for (std::size_t n = 0; n < m.order(); ++n) {
    for (std::size_t a = 0; a < 2; ++a) {
      for (std::size_t c = 0; c < 2; ++c) {
        parallel[n] += element(m[n], a, c, a, c);
        crossed[n] += element(m[n], a, c, c, a);
      }
    }
  }
  return {std::move(parallel), std::move(crossed)};
}

}  // namespace duflo
