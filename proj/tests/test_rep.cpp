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

#include <gtest/gtest.h>

#include "duflo/error.hpp"
#include "duflo/io/format.hpp"
#include "duflo/liesym/calculus.hpp"
#include "duflo/quantmaps/quantize.hpp"
#include "duflo/quantmaps/symmetrize.hpp"
#include "duflo/rep/spin_half.hpp"
#include "duflo/uea/pbw.hpp"

namespace duflo {
namespace {

const GaussRat kI = GaussRat::imaginary_unit();

Mat2 mat(GaussRat a, GaussRat b, GaussRat c, GaussRat d) {
  Mat2 m;
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

Mat4 swap_matrix() {
  Mat4 s;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) s(2 * a + b, 2 * b + a) = 1;
  return s;
}

TEST(Tau, Matrices) {
  const GaussRat h = make_rational(1, 2);
  EXPECT_EQ(tau(0), mat(0, -kI * h, -kI * h, 0));
  EXPECT_EQ(tau(1), mat(0, -h, h, 0));
  EXPECT_EQ(tau(2), mat(-kI * h, 0, 0, kI * h));
  EXPECT_THROW(tau(3), Error);
}

TEST(Tau, Relations) {
  const LieData& lie = LieData::su2();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Mat2 bracket;
      for (std::size_t k = 0; k < 3; ++k) bracket += tau(k) * GaussRat(lie.f(i, j, k));
      EXPECT_EQ(tau(i) * tau(j) - tau(j) * tau(i), bracket);
    }
  EXPECT_EQ(tau(0) * tau(0) + tau(1) * tau(1) + tau(2) * tau(2), Mat2::identity() * GaussRat(make_rational(-3, 4)));
}

TEST(RepHalf, Examples) {
  EXPECT_EQ(rep_half(UEAElem::generator(0)), tau(0));
  EXPECT_EQ(rep_half(casimir()), Mat2::identity() * GaussRat(make_rational(3, 8)));
  EXPECT_EQ(rep_half(q_sym(norm_sq_power(2))), Mat2::identity() * GaussRat(make_rational(5, 64)));
  EXPECT_EQ(rep_half(UEAElem()), Mat2());
}

TEST(RepHalf, Homomorphism) {
  std::vector<Exponent> basis;
  for (std::uint32_t a = 0; a <= 4; ++a)
    for (std::uint32_t b = 0; a + b <= 4; ++b)
      for (std::uint32_t c = 0; a + b + c <= 4; ++c) basis.push_back({a, b, c});
  for (const auto& x : basis)
    for (const auto& y : basis) {
      const UEAElem ex = UEAElem::monomial(x);
      const UEAElem ey = UEAElem::monomial(y);
      ASSERT_EQ(rep_half(pbw_mul(ex, ey)), rep_half(ex) * rep_half(ey));
    }
}

TEST(RepHalf, MonomialIsOrderedMatrixProduct) {
  const Exponent e{2, 3, 1};
  Mat2 expected = Mat2::identity();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::uint32_t n = 0; n < e[i]; ++n) expected = expected * tau(i);
  EXPECT_EQ(rep_half(UEAElem::monomial(e)), expected);
}

TEST(RepHalf, DufloInvariants) {
  for (unsigned k = 0; k <= 5; ++k) {
    EXPECT_EQ(rep_half(q_duflo(norm_sq_power(k))), Mat2::identity() * duflo_closed_spinhalf(k, false)) << k;
    EXPECT_EQ(duflo_closed_spinhalf(k, false), GaussRat(pow(Rational(1, 2), k)));
  }
}

TEST(TensorSumTau, Completeness) {
  const Mat4 t = tensor_sum_tau();
  const Mat4 expected = (swap_matrix() * GaussRat(2) - Mat4::identity()) * GaussRat(make_rational(-1, 4));
  EXPECT_EQ(t, expected);
  GaussRat closed;
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t c = 0; c < 2; ++c) closed += element(t, a, c, a, c);
  EXPECT_EQ(closed, GaussRat(0));
  EXPECT_EQ(kron(tau(0), tau(0)) + kron(tau(1), tau(1)) + kron(tau(2), tau(2)), t);
}

TEST(Kron, IndexConvention) {
  const Mat2 x = mat(1, 2, 3, 4);
  const Mat2 y = mat(5, kI, 7, 8);
  const Mat4 k = kron(x, y);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t d = 0; d < 2; ++d)
        for (std::size_t b = 0; b < 2; ++b) EXPECT_EQ(element(k, a, c, d, b), x(a, d) * y(c, b));
  EXPECT_EQ(kron(x, y) * kron(y, x), kron(x * y, y * x));
}

}  // namespace
}  // namespace duflo
