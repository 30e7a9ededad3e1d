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

#include <map>
#include <vector>

#include "duflo/error.hpp"
#include "duflo/io/format.hpp"
#include "duflo/uea/pbw.hpp"

namespace duflo {
namespace {

using Word = std::vector<std::size_t>;

UEAElem G(std::size_t i) { return UEAElem::generator(i); }
UEAElem c(long p, long q = 1) { return UEAElem::constant(GaussRat(make_rational(p, q))); }

std::vector<Exponent> exponents_up_to(unsigned d) {
  std::vector<Exponent> out;
  for (std::uint32_t a = 0; a <= d; ++a)
    for (std::uint32_t b = 0; a + b <= d; ++b)
      for (std::uint32_t cc = 0; a + b + cc <= d; ++cc) out.push_back({a, b, cc});
  return out;
}

Word word_of(const Exponent& e) {
  Word w;
  for (std::size_t i = 0; i < kRank; ++i) w.insert(w.end(), e[i], i);
  return w;
}

// Normal-orders a word by repeatedly rewriting the leftmost descent
// Ê_j Ê_i (j > i) as Ê_i Ê_j + f_{ji}^k Ê_k.
UEAElem free_word_normal_order(const Word& start) {
  const LieData& lie = LieData::su2();
  std::map<Word, GaussRat> pending{{start, GaussRat(1)}};
  UEAElem out;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const GaussRat coeff = node.mapped();
    std::size_t pos = 0;
    while (pos + 1 < w.size() && w[pos] <= w[pos + 1]) ++pos;
    if (pos + 1 >= w.size()) {
      Exponent e{};
      for (std::size_t g : w) ++e[g];
      out.add_term(e, coeff);
      continue;
    }
    auto push = [&](Word word, const GaussRat& c) {
      auto [it, inserted] = pending.try_emplace(std::move(word), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) pending.erase(it);
      }
    };
    Word swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    push(swapped, coeff);
    for (std::size_t k = 0; k < kRank; ++k) {
      const Rational& f = lie.f(w[pos], w[pos + 1], k);
      if (sgn(f) == 0) continue;
      Word shorter(w.begin(), w.begin() + static_cast<long>(pos));
      shorter.push_back(k);
      shorter.insert(shorter.end(), w.begin() + static_cast<long>(pos) + 2, w.end());
      push(shorter, coeff * GaussRat(f));
    }
  }
  return out;
}

TEST(Pbw, Examples) {
  EXPECT_EQ(pbw_mul(G(0), G(1)), UEAElem::monomial({1, 1, 0}));
  EXPECT_EQ(pbw_mul(G(1), G(0)), UEAElem::monomial({1, 1, 0}) - G(2));
  EXPECT_EQ(pbw_mul(G(2), UEAElem::monomial({1, 1, 0})),
            UEAElem::monomial({1, 1, 1}) - UEAElem::monomial({2, 0, 0}) + UEAElem::monomial({0, 2, 0}));
}

TEST(Pbw, MatchesFreeWordRewriting) {
  const auto basis = exponents_up_to(3);
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      Word w = word_of(a);
      const Word wb = word_of(b);
      w.insert(w.end(), wb.begin(), wb.end());
      ASSERT_EQ(pbw_mul(UEAElem::monomial(a), UEAElem::monomial(b)), free_word_normal_order(w));
    }
  }
}

TEST(Pbw, ReverseWordsMatchOracle) {
  for (std::size_t n = 2; n <= 7; ++n) {
    Word w;
    for (std::size_t k = 0; k < n; ++k) w.push_back(2 - (k % 3));
    UEAElem product = UEAElem::constant(1);
    for (std::size_t g : w) product = pbw_mul(product, G(g));
    EXPECT_EQ(product, free_word_normal_order(w)) << n;
  }
}

TEST(Pbw, Associativity) {
  const auto basis = exponents_up_to(2);
  for (const auto& a : basis)
    for (const auto& b : basis)
      for (const auto& cc : basis) {
        const UEAElem x = UEAElem::monomial(a);
        const UEAElem y = UEAElem::monomial(b);
        const UEAElem z = UEAElem::monomial(cc);
        ASSERT_EQ(pbw_mul(pbw_mul(x, y), z), pbw_mul(x, pbw_mul(y, z)));
      }
}

TEST(Pbw, AssociativityOnMixedElements) {
  const UEAElem x = G(0) * GaussRat(3) + UEAElem::monomial({0, 2, 1}) - c(1, 2);
  const UEAElem y = UEAElem::monomial({1, 0, 2}) + GaussRat::imaginary_unit() * G(1);
  const UEAElem z = UEAElem::monomial({2, 1, 0}) - G(2);
  EXPECT_EQ(pbw_mul(pbw_mul(x, y), z), pbw_mul(x, pbw_mul(y, z)));
}

TEST(Pbw, DegreeOneCommutators) {
  const LieData& lie = LieData::su2();
  const PbwAlgebra& algebra = PbwAlgebra::su2();
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      UEAElem bracket;
      for (std::size_t k = 0; k < 3; ++k) bracket.add_term(unit_exponent(k), GaussRat(lie.f(i, j, k)));
      EXPECT_EQ(algebra.commutator(G(i), G(j)), bracket);
      EXPECT_EQ(pbw_mul(G(i), G(j)) - pbw_mul(G(j), G(i)), bracket);
    }
  }
}

TEST(Pbw, OneSidedProductsAgreeWithMultiply) {
  const PbwAlgebra& algebra = PbwAlgebra::su2();
  for (const auto& e : exponents_up_to(4)) {
    const UEAElem x = UEAElem::monomial(e);
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_EQ(algebra.left_multiply(i, x), pbw_mul(G(i), x));
      EXPECT_EQ(algebra.right_multiply(x, i), pbw_mul(x, G(i)));
    }
  }
}

TEST(Casimir, Structure) {
  const UEAElem delta = casimir();
  EXPECT_EQ(delta.size(), 3U);
  for (const auto& [e, coeff] : delta.terms()) {
    EXPECT_EQ(degree(e), 2U);
    EXPECT_EQ(coeff, GaussRat(make_rational(-1, 2)));
  }
  EXPECT_EQ(pbw_mul(delta, G(0)), pbw_mul(G(0), delta));
}

TEST(Casimir, Centrality) {
  const PbwAlgebra& algebra = PbwAlgebra::su2();
  const UEAElem delta = casimir();
  EXPECT_TRUE(is_central(delta));
  EXPECT_FALSE(is_central(G(0)));
  EXPECT_TRUE(is_central(pbw_mul(delta, delta) + GaussRat(7) * delta));
  EXPECT_TRUE(is_central(c(3)));
  for (unsigned m = 0; m <= 4; ++m) EXPECT_TRUE(algebra.is_central(algebra.casimir_power(m)));
  EXPECT_EQ(algebra.casimir_power(3), algebra.power(delta, 3));
}

TEST(Casimir, Decompose) {
  const UEAElem delta = casimir();
  EXPECT_EQ(center_decompose(delta), (std::vector<GaussRat>{0, 1}));
  EXPECT_EQ(center_decompose(delta + c(1, 8)), (std::vector<GaussRat>{make_rational(1, 8), 1}));
  EXPECT_EQ(center_decompose(UEAElem()), std::vector<GaussRat>{});
}

TEST(Casimir, DecomposeRoundTrip) {
  const PbwAlgebra& algebra = PbwAlgebra::su2();
  const std::vector<std::vector<GaussRat>> polys{
      {1},
      {0, 0, 1},
      {make_rational(-3, 7), 2, 0, GaussRat::imaginary_unit()},
      {1, 2, 3, 4, 5, 6},
      {0, 0, 0, 0, 0, make_rational(1, 32)},
  };
  for (const auto& p : polys) {
    EXPECT_EQ(algebra.center_decompose(algebra.from_casimir_polynomial(p)), p);
  }
}

TEST(Casimir, DecomposeErrors) {
  try {
    center_decompose(G(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCentral);
  }
}

TEST(Pbw, RejectsOtherDimensions) {
  std::vector<Rational> f(8, Rational(0));
  EXPECT_THROW(PbwAlgebra(LieData(2, f)), Error);
}

}  // namespace
}  // namespace duflo
