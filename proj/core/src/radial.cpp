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

#include "duflo/quantmaps/radial.hpp"

#include <algorithm>
#include <utility>

#include "duflo/error.hpp"
#include "duflo/liesym/calculus.hpp"

namespace duflo {
namespace {

void trim(std::vector<GaussRat>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

void set_at(std::vector<GaussRat>& v, std::size_t k, const GaussRat& c) {
  if (v.size() <= k) v.resize(k + 1);
  v[k] = c;
}

}  // namespace

RadialDecomposition classify_radial(const SymPoly& p) {
  RadialDecomposition out;
  const unsigned top = p.degree();
  for (unsigned d = 0; d <= top; ++d) {
    SymPoly residual = p.homogeneous_part(d);
    if (residual.is_zero()) continue;
    const unsigned k = d / 2;
    const SymPoly radial = norm_sq_power(k);

    // (slot, basis element): slot 3 is the invariant, 0..2 the E_i multiples.
    std::vector<std::pair<std::size_t, SymPoly>> basis;
    if (d % 2 == 0) {
      basis.emplace_back(3, radial);
    } else {
      for (std::size_t i = 0; i < kRank; ++i) basis.emplace_back(i, radial * SymPoly::generator(i));
    }
    std::sort(basis.begin(), basis.end(), [](const auto& a, const auto& b) {
      return a.second.terms().rbegin()->first > b.second.terms().rbegin()->first;
    });
    for (const auto& [slot, b] : basis) {
      const auto& [lead, lead_coeff] = *b.terms().rbegin();
      const GaussRat c = residual.coeff(lead) / lead_coeff;
      if (c.is_zero()) continue;
      residual.add_scaled(b, -c);
      if (slot == 3) {
        set_at(out.even, k, c);
      } else {
        set_at(out.odd[slot], k, c);
      }
    }
    if (!residual.is_zero()) {
      throw Error(ErrorCode::NotRadial,
                  "degree-" + std::to_string(d) +
                      " part is outside the span of ||E||^{2k} and ||E||^{2k} E_i");
    }
  }
  trim(out.even);
  for (auto& v : out.odd) trim(v);
  return out;
}

SymPoly reassemble(const RadialDecomposition& r) {
  SymPoly out;
  for (std::size_t k = 0; k < r.even.size(); ++k) {
    out.add_scaled(norm_sq_power(static_cast<unsigned>(k)), r.even[k]);
  }
  for (std::size_t i = 0; i < kRank; ++i) {
    for (std::size_t k = 0; k < r.odd[i].size(); ++k) {
      out.add_scaled(norm_sq_power(static_cast<unsigned>(k)) * SymPoly::generator(i), r.odd[i][k]);
    }
  }
  return out;
}

}  // namespace duflo
