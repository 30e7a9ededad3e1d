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

#include <vector>

#include "duflo/error.hpp"
#include "duflo/io/format.hpp"
#include "duflo/liesym/calculus.hpp"
#include "duflo/liesym/lie_data.hpp"
#include "duflo/liesym/sym_poly.hpp"

namespace duflo {
namespace {

SymPoly E(std::size_t i) { return SymPoly::generator(i); }
SymPoly c(long p, long q = 1) { return SymPoly::constant(GaussRat(make_rational(p, q))); }

std::vector<SymPoly> monomials_up_to(unsigned d) {
  std::vector<SymPoly> out;
  for (std::uint32_t a = 0; a <= d; ++a)
    for (std::uint32_t b = 0; a + b <= d; ++b)
      for (std::uint32_t cc = 0; a + b + cc <= d; ++cc) out.push_back(SymPoly::monomial({a, b, cc}));
  return out;
}

TEST(LieData, Su2Constants) {
  const LieData& su2 = LieData::su2();
  EXPECT_EQ(su2.dim(), 3U);
  EXPECT_EQ(su2.f(0, 1, 2), Rational(1));
  EXPECT_EQ(su2.f(1, 0, 2), Rational(-1));
  EXPECT_EQ(su2.f(0, 0, 2), Rational(0));
  for (std::size_t m = 0; m < 3; ++m) {
    for (std::size_t n = 0; n < 3; ++n) {
      EXPECT_EQ(su2.kappa(m, n), Rational(m == n ? -2 : 0));
      EXPECT_EQ(su2.kappa_inv(m, n), m == n ? make_rational(-1, 2) : Rational(0));
      Rational product = 0;
      for (std::size_t k = 0; k < 3; ++k) product += su2.kappa_inv(m, k) * su2.kappa(k, n);
      EXPECT_EQ(product, Rational(m == n ? 1 : 0));
    }
  }
  EXPECT_TRUE(su2.is_su2());
}

TEST(LieData, JacobiBySummation) {
  const LieData& lie = LieData::su2();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) {
          Rational s = 0;
          for (std::size_t m = 0; m < 3; ++m) {
            s += lie.f(i, j, m) * lie.f(m, k, l) + lie.f(j, k, m) * lie.f(m, i, l) +
                 lie.f(k, i, m) * lie.f(m, j, l);
          }
          EXPECT_EQ(s, Rational(0));
        }
  EXPECT_EQ(lie.jacobi_defect(), Rational(0));
}

TEST(LieData, RejectsInvalidConstants) {
  std::vector<Rational> f(27, Rational(0));
  f[(0 * 3 + 1) * 3 + 2] = 1;  // not antisymmetric
  EXPECT_THROW(LieData(3, f), Error);
  EXPECT_THROW(LieData(3, std::vector<Rational>(5)), Error);
  // abelian: degenerate Killing form
  EXPECT_THROW(LieData(3, std::vector<Rational>(27, Rational(0))), Error);
}

TEST(LieData, RescaledSu2IsNotBuiltin) {
  std::vector<Rational> f(27, Rational(0));
  auto set = [&](int i, int j, int k, long v) { f[(i * 3 + j) * 3 + k] = v; };
  set(0, 1, 2, 2); set(1, 0, 2, -2);
  set(1, 2, 0, 2); set(2, 1, 0, -2);
  set(2, 0, 1, 2); set(0, 2, 1, -2);
  const LieData scaled(3, f);
  EXPECT_FALSE(scaled.is_su2());
  EXPECT_EQ(scaled.kappa(0, 0), Rational(-8));
  EXPECT_THROW(jhalf_apply(E(0), scaled), Error);
}

TEST(SymPoly, ArithmeticIsCommutative) {
  const SymPoly p = E(0) * E(1) + c(2) * E(2);
  const SymPoly q = E(0) - c(1, 3);
  EXPECT_EQ(p * q, q * p);
  EXPECT_EQ(pow(E(0) + E(1), 2), E(0) * E(0) + c(2) * E(0) * E(1) + E(1) * E(1));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).size(), 0U);
}

TEST(Calculus, NormSquarePowers) {
  EXPECT_EQ(norm_sq_power(0), c(1));
  const SymPoly n1 = c(-1, 2) * (E(0) * E(0) + E(1) * E(1) + E(2) * E(2));
  EXPECT_EQ(norm_sq_power(1), n1);
  EXPECT_EQ(norm_sq(), n1);
  const SymPoly n2 = norm_sq_power(2);
  EXPECT_EQ(n2.size(), 6U);
  EXPECT_EQ(n2, n1 * n1);
}

TEST(Calculus, Partials) {
  EXPECT_EQ(partial(0, E(0)), c(1));
  EXPECT_EQ(partial(0, E(0) * E(0) * E(1)), c(2) * E(0) * E(1));
  EXPECT_EQ(partial(1, norm_sq()), -E(1));
  EXPECT_TRUE(partial(2, E(0)).is_zero());
}

TEST(Calculus, KksBracketExamples) {
  EXPECT_EQ(kks_bracket(E(0), E(1)), E(2));
  EXPECT_TRUE(kks_bracket(E(0), E(0)).is_zero());
  EXPECT_EQ(kks_bracket(E(0) * E(1), E(2)), E(0) * E(0) - E(1) * E(1));
}

TEST(Calculus, KksBracketAntisymmetryAndJacobi) {
  const auto basis = monomials_up_to(3);
  for (const auto& p : basis) {
    for (const auto& q : basis) {
      EXPECT_EQ(kks_bracket(p, q), -kks_bracket(q, p));
    }
  }
  for (const auto& p : basis) {
    for (const auto& q : basis) {
      const SymPoly pq = kks_bracket(p, q);
      for (const auto& r : basis) {
        const SymPoly s = kks_bracket(pq, r) + kks_bracket(kks_bracket(q, r), p) +
                          kks_bracket(kks_bracket(r, p), q);
        ASSERT_TRUE(s.is_zero());
      }
    }
  }
}

TEST(Calculus, CasimirIsPoissonCentral) {
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(kks_bracket(norm_sq(), E(i)).is_zero());
}

TEST(Calculus, NormPartialSquare) {
  EXPECT_TRUE(norm_partial_sq(E(0)).is_zero());
  EXPECT_EQ(norm_partial_sq(norm_sq() * E(0)), c(10) * E(0));
  EXPECT_EQ(norm_partial_sq(norm_sq_power(2)), c(20) * norm_sq());
  for (unsigned k = 1; k <= 6; ++k) {
    const SymPoly lower = norm_sq_power(k - 1);
    EXPECT_EQ(norm_partial_sq(norm_sq_power(k)), c(2L * k * (2 * k + 1)) * lower);
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_EQ(norm_partial_sq(norm_sq_power(k) * E(i)), c((2L * k + 3) * 2 * k) * lower * E(i));
    }
  }
}

TEST(Calculus, JhalfExamples) {
  EXPECT_EQ(jhalf_apply(E(0)), E(0));
  EXPECT_EQ(jhalf_apply(norm_sq() * E(0)), norm_sq() * E(0) + c(5, 24) * E(0));
  EXPECT_EQ(jhalf_apply(norm_sq()), norm_sq() + c(1, 8));
}

TEST(Calculus, DiffopClosedForm) {
  EXPECT_EQ(diffop_closed(0), std::vector<Rational>{1});
  EXPECT_EQ(diffop_closed(1), (std::vector<Rational>{1, make_rational(5, 24)}));
  EXPECT_EQ(diffop_closed(4, 2).size(), 2U);
}

TEST(Calculus, JhalfAgreesWithDiffopClosed) {
  for (unsigned k = 0; k <= 6; ++k) {
    const auto coeffs = diffop_closed(k);
    for (std::size_t i = 0; i < 3; ++i) {
      SymPoly expected;
      for (unsigned n = 0; n < coeffs.size(); ++n) {
        expected += GaussRat(coeffs[n]) * norm_sq_power(k - n) * E(i);
      }
      EXPECT_EQ(jhalf_apply(norm_sq_power(k) * E(i)), expected) << "k=" << k;
    }
  }
}

// Scalar oracle: j^{1/2}(d) = sum_N 8^{-N}/(2N+1)! (||d||^2)^N together with
// ||d||^2 ||E||^{2m} = 2m(2m+1) ||E||^{2(m-1)}.
TEST(Calculus, JhalfOnInvariantsMatchesScalarOracle) {
  for (unsigned k = 0; k <= 6; ++k) {
    SymPoly expected;
    Rational chain = 1;
    for (unsigned n = 0; n <= k; ++n) {
      if (n > 0) chain *= Rational(2 * (k - n + 1) * (2 * (k - n + 1) + 1));
      const Rational a = pow(Rational(1, 8), n) / Rational(factorial(2 * n + 1));
      expected += GaussRat(a * chain) * norm_sq_power(k - n);
    }
    EXPECT_EQ(jhalf_apply(norm_sq_power(k)), expected) << "k=" << k;
  }
}

TEST(Calculus, JhalfIsLaplacianSeriesOnAllMonomials) {
  for (const auto& m : monomials_up_to(6)) {
    SymPoly expected;
    SymPoly current = m;
    for (unsigned n = 0; !current.is_zero(); ++n) {
      expected += GaussRat(pow(Rational(1, 8), n) / Rational(factorial(2 * n + 1))) * current;
      current = norm_partial_sq(current);
    }
    EXPECT_EQ(jhalf_apply(m), expected) << to_text(m);
  }
}

TEST(Calculus, DiffopStopsAtLastNonzeroTerm) {
  EXPECT_EQ(diffop_closed(3, 10).size(), 4U);
}

}  // namespace
}  // namespace duflo
