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

#include "duflo/liesym/sym_poly.hpp"

namespace duflo {

SymPoly& SymPoly::operator*=(const SymPoly& o) {
  Terms out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      GaussRat c = ca * cb;
      auto [it, inserted] = out.try_emplace(ea + eb, c);
      if (!inserted) it->second += c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  terms_ = std::move(out);
  return *this;
}

bool SymPoly::is_homogeneous(unsigned d) const {
  for (const auto& [e, c] : terms_) {
    if (duflo::degree(e) != d) return false;
  }
  return true;
}

SymPoly pow(const SymPoly& p, unsigned exp) {
  SymPoly result = SymPoly::constant(1);
  SymPoly base = p;
  while (exp != 0) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp != 0) base = base * base;
  }
  return result;
}

}  // namespace duflo
