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

#include "duflo/expmap/classical.hpp"

#include <stdexcept>

#include "duflo/error.hpp"
#include "duflo/liesym/lie_data.hpp"
#include "duflo/rep/spin_half.hpp"

namespace duflo {
namespace {

// tau_i tau_j = unit[i][j] 1 + sum_k gen[i][j][k] tau_k, read off the matrices.
struct TauTable {
  GaussRat unit[3][3];
  GaussRat gen[3][3][3];

  TauTable() {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        const Mat2 m = tau(i) * tau(j);
        unit[i][j] = m.trace() / GaussRat(2);
        Mat2 rebuilt = Mat2::identity() * unit[i][j];
        for (std::size_t k = 0; k < 3; ++k) {
          gen[i][j][k] = (m * tau(k)).trace() / (tau(k) * tau(k)).trace();
          rebuilt += tau(k) * gen[i][j][k];
        }
        if (rebuilt != m) throw std::logic_error("tau products leave span{1, tau}");
      }
    }
  }
};

const TauTable& tau_table() {
  static const TauTable t;
  return t;
}

SlotPoly scaled(SlotPoly s, const GaussRat& c) {
  s.identity *= c;
  for (auto& g : s.generator) g *= c;
  return s;
}

}  // namespace

SlotPoly operator*(const SlotPoly& a, const SlotPoly& b) {
  const TauTable& t = tau_table();
  SlotPoly out;
  out.identity = a.identity * b.identity;
  for (std::size_t j = 0; j < 3; ++j) {
    out.generator[j] = a.identity * b.generator[j] + a.generator[j] * b.identity;
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (a.generator[i].is_zero()) continue;
    for (std::size_t j = 0; j < 3; ++j) {
      if (b.generator[j].is_zero()) continue;
      const SymPoly prod = a.generator[i] * b.generator[j];
      out.identity.add_scaled(prod, t.unit[i][j]);
      for (std::size_t k = 0; k < 3; ++k) out.generator[k].add_scaled(prod, t.gen[i][j][k]);
    }
  }
  return out;
}

GradedClassicalExp classical_exp_series(std::size_t order) {
  if (order == 0) throw Error(ErrorCode::InvalidArgument, "order must be at least 1");
  const LieData& lie = LieData::su2();
  // Coefficient of u in the exponent: -8 i kappa^{ij} E_i T_j.
  SlotPoly exponent;
  const GaussRat minus_8i(Rational(0), Rational(-8));
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < 3; ++i) {
      exponent.generator[j].add_scaled(SymPoly::generator(i), minus_8i * GaussRat(lie.kappa_inv(i, j)));
    }
  }
  GradedClassicalExp out;
  SlotPoly power;
  power.identity = SymPoly::constant(1);
  Rational inv_factorial(1);
  for (std::size_t n = 0; n < order; ++n) {
    if (n > 0) {
      power = power * exponent;
      inv_factorial /= static_cast<unsigned long>(n);
    }
    out.terms.push_back(scaled(power, GaussRat(inv_factorial)));
  }
  return out;
}

}  // namespace duflo
