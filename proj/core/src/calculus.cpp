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

#include "duflo/liesym/calculus.hpp"

#include "duflo/error.hpp"

namespace duflo {

SymPoly norm_sq(const LieData& lie) {
  SymPoly out;
  for (std::size_t i = 0; i < kRank; ++i) {
    for (std::size_t j = 0; j < kRank; ++j) {
      out.add_term(unit_exponent(i) + unit_exponent(j), GaussRat(lie.kappa_inv(i, j)));
    }
  }
  return out;
}

SymPoly norm_sq_power(unsigned k, const LieData& lie) {
  return pow(norm_sq(lie), k);
}

SymPoly partial(std::size_t i, const SymPoly& p) {
  if (i >= kRank) throw Error(ErrorCode::IndexOutOfRange, "generator index out of range");
  SymPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e[i] == 0) continue;
    Exponent d = e;
    d[i] -= 1;
    out.add_term(d, c * GaussRat(static_cast<long>(e[i])));
  }
  return out;
}

SymPoly kks_bracket(const SymPoly& p, const SymPoly& q, const LieData& lie) {
  SymPoly out;
  for (std::size_t i = 0; i < kRank; ++i) {
    const SymPoly dp = partial(i, p);
    if (dp.is_zero()) continue;
    for (std::size_t j = 0; j < kRank; ++j) {
      SymPoly dq = partial(j, q);
      if (dq.is_zero()) continue;
      SymPoly structure;
      for (std::size_t k = 0; k < kRank; ++k) {
        structure.add_term(unit_exponent(k), GaussRat(lie.f(i, j, k)));
      }
      if (structure.is_zero()) continue;
      out += structure * dp * dq;
    }
  }
  return out;
}

SymPoly norm_partial_sq(const SymPoly& p, const LieData& lie) {
  SymPoly out;
  for (std::size_t m = 0; m < kRank; ++m) {
    const SymPoly dm = partial(m, p);
    for (std::size_t n = 0; n < kRank; ++n) {
      if (sgn(lie.kappa(m, n)) == 0) continue;
      out.add_scaled(partial(n, dm), GaussRat(lie.kappa(m, n)));
    }
  }
  return out;
}

SymPoly jhalf_apply(const SymPoly& p, const LieData& lie) {
  if (!lie.is_su2()) {
    throw Error(ErrorCode::UnsupportedAlgebra, "j^{1/2} is only evaluated for su(2)");
  }
  SymPoly out = p;
  SymPoly power = p;
  Rational weight(1);
  for (unsigned n = 1; 2 * n <= p.degree(); ++n) {
    power = norm_partial_sq(power, lie);
    if (power.is_zero()) break;
    // 1/((2N+1)! 8^N) built incrementally from the N-1 weight.
    weight /= Rational(8 * (2 * n) * (2 * n + 1));
    out.add_scaled(power, GaussRat(weight));
  }
  return out;
}

std::vector<Rational> diffop_closed(unsigned k, unsigned max_terms) {
  std::vector<Rational> out;
  for (unsigned n = 0; n <= k && n < max_terms; ++n) {
    Rational c = make_rational(factorial(2 * k + 1), factorial(2 * n + 1) * factorial(2 * k - 2 * n + 1));
    c /= pow(Rational(8), n);
    c *= make_rational(2 * k + 3, 2 * k - 2 * n + 3);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace duflo
