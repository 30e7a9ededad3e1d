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
#include "duflo/quantmaps/map_kind.hpp"
#include "duflo/quantmaps/quantize.hpp"
#include "duflo/quantmaps/radial.hpp"
#include "duflo/quantmaps/symmetrize.hpp"
#include "duflo/uea/pbw.hpp"

namespace duflo {
namespace {

SymPoly E(std::size_t i) { return SymPoly::generator(i); }
UEAElem G(std::size_t i) { return UEAElem::generator(i); }
UEAElem uc(long p, long q = 1) { return UEAElem::constant(GaussRat(make_rational(p, q))); }

UEAElem duflo_casimir() { return casimir() + uc(1, 8); }

TEST(MapKind, Names) {
  for (MapKind k : kAllMapKinds) EXPECT_EQ(parse_map_kind(to_string(k)), k);
  EXPECT_EQ(to_string(MapKind::DufloMod), "duflo-mod");
  EXPECT_THROW(parse_map_kind("weyl"), Error);
}

TEST(QSym, Examples) {
  EXPECT_EQ(q_sym(E(0)), G(0));
  EXPECT_EQ(q_sym(E(0) * E(1)), UEAElem::monomial({1, 1, 0}) - GaussRat(make_rational(1, 2)) * G(2));
  EXPECT_EQ(q_sym(norm_sq()), casimir());
  EXPECT_EQ(q_sym(SymPoly::constant(5)), uc(5));
}

TEST(QSym, BruteforceThreeWords) {
  const UEAElem e1 = G(0);
  const UEAElem e3 = G(2);
  const UEAElem expected = GaussRat(make_rational(1, 3)) * (pbw_mul(pbw_mul(e1, e1), e3) + pbw_mul(pbw_mul(e1, e3), e1) +
                                      pbw_mul(pbw_mul(e3, e1), e1));
  EXPECT_EQ(q_sym_bruteforce(E(0) * E(0) * E(2)), expected);
  EXPECT_EQ(q_sym(E(0) * E(0) * E(2)), expected);
}

TEST(QSym, BruteforceGuard) {
  const SymPoly p = pow(E(0), 5) * pow(E(1), 5);
  try {
    q_sym_bruteforce(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeTooLarge);
  }
}

TEST(QSym, AgreesWithBruteforceOnNorms) {
  for (unsigned k = 0; k <= 4; ++k) EXPECT_EQ(q_sym(norm_sq_power(k)), q_sym_bruteforce(norm_sq_power(k)));
}

TEST(QSym, IsLinear) {
  const SymPoly p = E(0) * E(1) * E(1) - GaussRat(3) * E(2);
  const SymPoly q = norm_sq() * E(0) + SymPoly::constant(GaussRat::imaginary_unit());
  EXPECT_EQ(q_sym(p + GaussRat(2) * q), q_sym(p) + GaussRat(2) * q_sym(q));
}

TEST(QSym, InvariantClosedForm) {
  EXPECT_EQ(q_sym_invariant_closed(0), uc(1));
  EXPECT_EQ(q_sym_invariant_closed(1), casimir());
  EXPECT_EQ(q_sym_invariant_closed(2), q_sym_bruteforce(norm_sq_power(2)));
  for (unsigned k = 0; k <= 5; ++k) {
    EXPECT_EQ(q_sym(norm_sq_power(k)), q_sym_invariant_closed(k)) << k;
    EXPECT_EQ(q_sym_invariant_closed(k, BernoulliKind::Second), q_sym_invariant_closed(k)) << k;
  }
}

// The Bernoulli closed form at k = 2 expanded by hand in powers of Delta.
TEST(QSym, FourthPowerCasimirCoefficients) {
  const Rational b2(1, 6);
  const Rational b4(-1, 30);
  // -(1/64) * [C(5,0) B0 (1-2) X^2 + C(5,2) B2 (4-2) X + C(5,4) B4 (16-2)], X = 1 + 8D
  const Rational c_x2 = Rational(-1, 64) * Rational(-1);
  const Rational c_x1 = Rational(-1, 64) * Rational(10) * b2 * Rational(2);
  const Rational c_x0 = Rational(-1, 64) * Rational(5) * b4 * Rational(14);
  const std::vector<GaussRat> expected{Rational(c_x2 + c_x1 + c_x0), Rational(c_x2 * 16 + c_x1 * 8),
                                       Rational(c_x2 * 64)};
  EXPECT_EQ(center_decompose(q_sym(norm_sq_power(2))), expected);
}

TEST(QSym, SeparateAlgebraInstanceGivesSameResult) {
  PbwAlgebra fresh(LieData::su2());
  const SymPoly p = pow(E(0), 2) * E(1) * pow(E(2), 3);
  EXPECT_EQ(q_sym(p, fresh), q_sym(p));
  EXPECT_EQ(q_sym_bruteforce(p, fresh), q_sym(p));
}

TEST(QDuflo, Examples) {
  EXPECT_EQ(q_duflo(norm_sq()), duflo_casimir());
  EXPECT_EQ(q_duflo(E(0)), G(0));
  EXPECT_EQ(q_duflo(norm_sq_power(2)), pbw_mul(duflo_casimir(), duflo_casimir()));
  EXPECT_EQ(center_decompose(q_duflo(norm_sq())), (std::vector<GaussRat>{make_rational(1, 8), 1}));
}

TEST(QDuflo, MultiplicativeOnInvariants) {
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned b = 0; a + b <= 4; ++b)
      EXPECT_EQ(q_duflo(norm_sq_power(a + b)), pbw_mul(q_duflo(norm_sq_power(a)), q_duflo(norm_sq_power(b))));
}

TEST(QDuflo, IntertwinesAdjointAction) {
  // Q_D is equivariant: [Ê_i, Q_D(p)] = Q_D({E_i, p}).
  const SymPoly p = E(0) * E(0) * E(1) + norm_sq() * E(2);
  const PbwAlgebra& algebra = PbwAlgebra::su2();
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(algebra.commutator(G(i), q_duflo(p)), q_duflo(kks_bracket(E(i), p)));
    EXPECT_EQ(algebra.commutator(G(i), q_sym(p)), q_sym(kks_bracket(E(i), p)));
  }
}

TEST(Radial, Classify) {
  const RadialDecomposition r = classify_radial(norm_sq() * E(2));
  EXPECT_TRUE(r.even.empty());
  EXPECT_TRUE(r.odd[0].empty());
  EXPECT_EQ(r.odd[2], (std::vector<GaussRat>{0, 1}));

  const RadialDecomposition even = classify_radial(SymPoly::constant(2) + norm_sq_power(2));
  EXPECT_EQ(even.even, (std::vector<GaussRat>{2, 0, 1}));

  try {
    classify_radial(E(0) * E(1) * E(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotRadial);
  }
  EXPECT_THROW(classify_radial(E(0) * E(0)), Error);
}

TEST(Radial, ReassembleRoundTrip) {
  const SymPoly p = SymPoly::constant(GaussRat(make_rational(1, 3))) - GaussRat(4) * norm_sq_power(3) +
                    norm_sq() * E(0) + GaussRat::imaginary_unit() * norm_sq_power(2) * E(1) + E(2);
  EXPECT_EQ(reassemble(classify_radial(p)), p);
  EXPECT_TRUE(classify_radial(SymPoly()).even.empty());
}

TEST(QExtended, Examples) {
  EXPECT_EQ(q_extended(MapKind::Npp, norm_sq() * E(0)), GaussRat(make_rational(1, 8)) * G(0));
  EXPECT_EQ(q_extended(MapKind::DufloMod, norm_sq() * E(0)), pbw_mul(duflo_casimir(), G(0)));
  EXPECT_EQ(q_extended(MapKind::Sym, E(0)), G(0));
  EXPECT_EQ(q_extended(MapKind::SymMod, norm_sq_power(2) * E(1)), pbw_mul(q_sym(norm_sq_power(2)), G(1)));
  EXPECT_EQ(q_extended(MapKind::Npp, norm_sq_power(3)), uc(1, 512));
  EXPECT_THROW(q_extended(MapKind::Npp, E(0) * E(1)), Error);
  EXPECT_EQ(q_extended(MapKind::Duflo, E(0) * E(1)), q_duflo(E(0) * E(1)));
}

TEST(QExtended, ModuleMapsAgreeWithParentsOnInvariants) {
  for (unsigned k = 0; k <= 4; ++k) {
    EXPECT_EQ(q_extended(MapKind::DufloMod, norm_sq_power(k)), q_duflo(norm_sq_power(k)));
    EXPECT_EQ(q_extended(MapKind::SymMod, norm_sq_power(k)), q_sym(norm_sq_power(k)));
  }
}

TEST(DufloClosed, SpinHalfScalars) {
  EXPECT_EQ(duflo_closed_spinhalf(1, false), GaussRat(make_rational(1, 2)));
  EXPECT_EQ(duflo_closed_spinhalf(1, true), GaussRat(make_rational(5, 12)));
  EXPECT_EQ(duflo_closed_spinhalf(0, true), GaussRat(1));
  EXPECT_EQ(duflo_closed_spinhalf(0, false), GaussRat(1));
}

TEST(NgiViaGi, SmallDegrees) {
  for (unsigned n = 0; n <= 4; ++n) EXPECT_TRUE(ngivia_gi_check(n)) << n;
  EXPECT_THROW(ngivia_gi_check(5), Error);
}

TEST(NgiViaGi, BruteforceSidesForSmallN) {
  const PbwAlgebra& algebra = PbwAlgebra::su2();
  for (unsigned n = 0; n <= 2; ++n) {
    UEAElem rhs;
    for (std::size_t i = 0; i < 3; ++i) {
      const UEAElem v = q_sym_bruteforce(norm_sq_power(n) * E(i));
      rhs.add_scaled(algebra.right_multiply(v, i), GaussRat(make_rational(-1, 2)));
    }
    EXPECT_EQ(q_sym_bruteforce(norm_sq_power(n + 1)), rhs) << n;
  }
}

TEST(NgiViaGi, VectorViaCasimir) {
  for (unsigned n = 0; n <= 4; ++n)
    for (std::size_t i = 0; i < 3; ++i)
      EXPECT_EQ(q_sym_vector_via_casimir(n, i), q_sym(norm_sq_power(n) * E(i))) << n;
}

}  // namespace
}  // namespace duflo
