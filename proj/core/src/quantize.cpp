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

#include "duflo/quantmaps/quantize.hpp"

#include <functional>

#include "duflo/error.hpp"
#include "duflo/liesym/calculus.hpp"
#include "duflo/quantmaps/radial.hpp"
#include "duflo/quantmaps/symmetrize.hpp"
#include "duflo/uea/pbw.hpp"

namespace duflo {
namespace {

UEAElem module_map(const SymPoly& p, const std::function<UEAElem(unsigned)>& invariant) {
  const RadialDecomposition r = classify_radial(p);
  const PbwAlgebra& algebra = PbwAlgebra::su2();
  UEAElem out;
  std::size_t top = r.even.size();
  for (const auto& v : r.odd) top = std::max(top, v.size());
  for (std::size_t k = 0; k < top; ++k) {
    const bool even_used = k < r.even.size() && !r.even[k].is_zero();
    bool odd_used = false;
    for (const auto& v : r.odd) odd_used = odd_used || (k < v.size() && !v[k].is_zero());
    if (!even_used && !odd_used) continue;
    const UEAElem image = invariant(static_cast<unsigned>(k));
    if (even_used) out.add_scaled(image, r.even[k]);
    for (std::size_t i = 0; i < kRank; ++i) {
      if (k < r.odd[i].size() && !r.odd[i][k].is_zero()) {
        out.add_scaled(algebra.right_multiply(image, i), r.odd[i][k]);
      }
    }
  }
  return out;
}

}  // namespace

UEAElem q_duflo(const SymPoly& p) { return q_sym(jhalf_apply(p)); }

UEAElem q_extended(MapKind kind, const SymPoly& p) {
  switch (kind) {
    case MapKind::Sym:
      return q_sym(p);
    case MapKind::Duflo:
      return q_duflo(p);
    case MapKind::DufloMod:
      return module_map(p, [](unsigned k) { return q_duflo(norm_sq_power(k)); });
    case MapKind::SymMod:
      return module_map(p, [](unsigned k) { return q_sym(norm_sq_power(k)); });
    case MapKind::Npp:
      return module_map(p, [](unsigned k) {
        return UEAElem::constant(GaussRat(Rational(1 / pow(Rational(8), k))));
      });
  }
  throw Error(ErrorCode::InvalidArgument, "unknown map kind");
}

GaussRat duflo_closed_spinhalf(unsigned k, bool with_generator) {
  Rational s = 1 / pow(Rational(2), k);
  if (with_generator) s *= (make_rational(2, 3) * k + 1) / Rational(k + 1);
  return GaussRat(s);
}

bool ngivia_gi_check(unsigned n) {
  if (n > 4) throw Error(ErrorCode::DegreeTooLarge, "ngivia_gi_check is limited to n <= 4");
  const PbwAlgebra& algebra = PbwAlgebra::su2();
  const LieData& lie = algebra.lie();
  const UEAElem lhs = q_sym(norm_sq_power(n + 1));
  const SymPoly radial = norm_sq_power(n);
  UEAElem rhs;
  for (std::size_t i = 0; i < kRank; ++i) {
    const UEAElem vector_part = q_sym(radial * SymPoly::generator(i));
    for (std::size_t j = 0; j < kRank; ++j) {
      if (sgn(lie.kappa_inv(i, j)) == 0) continue;
      rhs.add_scaled(algebra.right_multiply(vector_part, j), GaussRat(lie.kappa_inv(i, j)));
    }
  }
  return lhs == rhs;
}

UEAElem q_sym_vector_via_casimir(unsigned n, std::size_t i) {
  const PbwAlgebra& algebra = PbwAlgebra::su2();
  std::vector<GaussRat> c = algebra.center_decompose(q_sym(norm_sq_power(n + 1)));
  if (c.empty() || !c[0].is_zero()) {
    throw Error(ErrorCode::NotPolynomialInCasimir, "Q_S(||E||^{2(n+1)}) is not divisible by Delta");
  }
  c.erase(c.begin());
  return algebra.right_multiply(algebra.from_casimir_polynomial(c), i);
}

}  // namespace duflo
