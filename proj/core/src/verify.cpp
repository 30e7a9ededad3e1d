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

#include "duflo/verify/acceptance.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "duflo/error.hpp"
#include "duflo/expmap/intertwiner.hpp"
#include "duflo/expmap/quantized.hpp"
#include "duflo/expmap/skein.hpp"
#include "duflo/liesym/calculus.hpp"
#include "duflo/numeric/taylor.hpp"
#include "duflo/quantmaps/quantize.hpp"
#include "duflo/quantmaps/symmetrize.hpp"
#include "duflo/rep/spin_half.hpp"
#include "duflo/uea/pbw.hpp"

namespace duflo {
namespace {

// Collects the first failure, if any, for the detail line.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  CriterionResult result(std::string id, std::string title) const {
    CriterionResult r{std::move(id), std::move(title), failure_.empty(), {}};
    r.detail = failure_.empty() ? std::to_string(count_) + " exact checks" : "first failure: " + failure_;
    return r;
  }

 private:
  std::size_t count_ = 0;
  std::string failure_;
};

CriterionResult guarded(const std::string& id, const std::string& title,
                        const std::function<CriterionResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {id, title, false, std::string("exception: ") + e.what()};
  }
}

CriterionResult a1_symmetrization_oracle() {
  Check check;
  for (std::uint32_t a = 0; a <= 7; ++a) {
    for (std::uint32_t b = 0; a + b <= 7; ++b) {
      for (std::uint32_t c = 0; a + b + c <= 7; ++c) {
        const SymPoly m = SymPoly::monomial({a, b, c});
        check.expect(q_sym(m) == q_sym_bruteforce(m),
                     "monomial (" + std::to_string(a) + "," + std::to_string(b) + "," +
                         std::to_string(c) + ")");
      }
    }
  }
  return check.result("A1", "q_sym equals brute-force symmetrization for degree <= 7");
}

void check_invariant_closed(Check& check, BernoulliKind kind) {
  for (unsigned k = 0; k <= 6; ++k) {
    const Mat2 expected = Mat2::identity() * GaussRat(make_rational(2 * k + 1, 1) / pow(Rational(8), k));
    check.expect(rep_half(q_sym(norm_sq_power(k))) == expected,
                 "Pi(Q_S(||E||^" + std::to_string(2 * k) + "))");
  }
  for (unsigned k = 0; k <= 5; ++k) {
    check.expect(q_sym(norm_sq_power(k)) == q_sym_invariant_closed(k, kind),
                 "Q_S(||E||^" + std::to_string(2 * k) + ") vs Bernoulli closed form");
  }
}

CriterionResult a2_sym_invariants() {
  Check check;
  check_invariant_closed(check, BernoulliKind::First);
  return check.result("A2", "Q_S(||E||^{2k}): spin-1/2 value (2k+1)/8^k and Bernoulli closed form");
}

CriterionResult a3_duflo_vectors() {
  Check check;
  for (unsigned k = 0; k <= 5; ++k) {
    const GaussRat expected(pow(Rational(1, 2), k) * (make_rational(2, 3) * k + 1) / Rational(k + 1));
    check.expect(duflo_closed_spinhalf(k, true) == expected, "closed form k=" + std::to_string(k));
    for (std::size_t i = 0; i < 3; ++i) {
      const Mat2 value = rep_half(q_duflo(norm_sq_power(k) * SymPoly::generator(i)));
      check.expect(value == tau(i) * expected,
                   "Pi(Q_D(||E||^" + std::to_string(2 * k) + " E" + std::to_string(i + 1) + "))");
    }
  }
  return check.result("A3", "Pi(Q_D(||E||^{2k} E_i)) = 2^{-k} ((2/3)k+1)/(k+1) tau_i, k <= 5");
}

CriterionResult a4_duflo_isomorphism() {
  Check check;
  const PbwAlgebra& algebra = PbwAlgebra::su2();
  for (unsigned a = 0; a <= 4; ++a) {
    for (unsigned b = 0; a + b <= 4; ++b) {
      check.expect(q_duflo(norm_sq_power(a + b)) ==
                       pbw_mul(q_duflo(norm_sq_power(a)), q_duflo(norm_sq_power(b))),
                   "a=" + std::to_string(a) + " b=" + std::to_string(b));
    }
  }
  const UEAElem shifted = algebra.casimir() + UEAElem::constant(GaussRat(make_rational(1, 8)));
  for (unsigned k = 0; k <= 4; ++k) {
    check.expect(q_duflo(norm_sq_power(k)) == algebra.power(shifted, k),
                 "(Delta + 1/8)^" + std::to_string(k));
  }
  return check.result("A4", "Q_D is multiplicative on invariants and Q_D(||E||^{2k}) = (Delta+1/8)^k");
}

CriterionResult a5_vector_reduction() {
  Check check;
  for (unsigned n = 0; n <= 4; ++n) check.expect(ngivia_gi_check(n), "n=" + std::to_string(n));
  return check.result("A5", "Q_S(||E||^{2(n+1)}) = kappa^{ij} Q_S(||E||^{2n} E_i) Ê_j, n <= 4");
}

struct ClosedPair {
  MapKind kind;
  Series alpha;
  Series beta;
};

std::vector<ClosedPair> closed_forms(std::size_t order) {
  const Rational one(1);
  const Rational two(2);
  const GaussRat i = GaussRat::imaginary_unit();
  const Series cos_u = taylor(ClosedForm::Cos, one, order);
  const Series sin_u = taylor(ClosedForm::Sin, one, order);
  const Series cos_2u = taylor(ClosedForm::Cos, two, order);
  const Series sin_2u = taylor(ClosedForm::Sin, two, order);
  const Series sinc_2u = taylor(ClosedForm::OneMinusCosOverU, two, order) * GaussRat(make_rational(1, 2));
  const GaussRat four_i_thirds = i * GaussRat(make_rational(4, 3));
  std::vector<ClosedPair> out;
  out.push_back({MapKind::Sym, cos_u - shift_up(sin_u, 1),
                 four_i_thirds * (GaussRat(2) * sin_u + shift_up(cos_u, 1))});
  out.push_back({MapKind::Duflo, cos_2u, four_i_thirds * (sin_2u + sinc_2u)});
  out.push_back({MapKind::DufloMod, cos_2u, i * GaussRat(2) * sin_2u});
  out.push_back({MapKind::Npp, cos_u, i * GaussRat(4) * sin_u});
  out.push_back({MapKind::SymMod, cos_u - shift_up(sin_u, 1), i * GaussRat(4) * shift_up(cos_u, 1)});
  return out;
}

CriterionResult a6_expmap_closed_forms() {
  Check check;
  constexpr std::size_t kOrder = 11;
  for (const auto& [kind, alpha, beta] : closed_forms(kOrder)) {
    const PauliDecomposition d = decompose_pauli(quantized_exp(kind, kOrder));
    check.expect(d.alpha == alpha, std::string(to_string(kind)) + " alpha");
    check.expect(d.beta == beta, std::string(to_string(kind)) + " beta");
  }
  return check.result("A6", "quantized exponential matches the closed forms through u^10");
}

CriterionResult a7_cross_series() {
  Check check;
  for (MapKind kind : kAllMapKinds) {
    check.expect(noui_cross_series(kind, 9) == quantized_exp(kind, 9), std::string(to_string(kind)));
  }
  return check.result("A7", "anticommutator-reduced series equals the quantized exponential, order 9");
}

CriterionResult a8_kauffman() {
  Check check;
  constexpr std::size_t kOrder = 11;
  for (MapKind kind : kAllMapKinds) {
    const SkeinReport r = kauffman_check(kind, kOrder);
    if (kind == MapKind::Npp) {
      check.expect(r.passes_kauffman, "npp must pass");
      check.expect(r.a_series && *r.a_series == taylor(ClosedForm::ExpI, Rational(1), kOrder),
                   "npp A = e^{iu}");
    } else {
      check.expect(!r.passes_kauffman, std::string(to_string(kind)) + " must fail");
    }
  }
  return check.result("A8", "Kauffman relation c1 c2 = 1 holds for npp only, with A = e^{iu}");
}

CriterionResult a9_bernoulli_convention() {
  Check check;
  check_invariant_closed(check, BernoulliKind::Second);
  for (unsigned k = 0; k <= 6; ++k) {
    const Rational first = spinhalf_sym_invariant_expanded(k, BernoulliKind::First);
    const Rational second = spinhalf_sym_invariant_expanded(k, BernoulliKind::Second);
    check.expect(first == second, "conventions differ at k=" + std::to_string(k));
    check.expect(first == make_rational(2 * k + 1, 1) / pow(Rational(8), k),
                 "full Bernoulli sum at k=" + std::to_string(k));
  }
  return check.result("A9", "results are independent of the B_1 sign convention");
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "symmetrization") return Suite::Symmetrization;
  if (name == "duflo") return Suite::Duflo;
  if (name == "expmap") return Suite::Expmap;
  if (name == "parser") return Suite::Parser;
  if (name == "all") return Suite::All;
  throw Error(ErrorCode::InvalidArgument, "unknown suite '" + std::string(name) + "'");
}

Expr random_expr(std::mt19937_64& rng, int max_depth) {
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  const int choice = max_depth <= 0 ? 3 + pick(4) : pick(7);
  switch (choice) {
    case 0: {
      const int n = 2 + pick(3);
      std::vector<Expr> terms;
      std::vector<bool> negated;
      for (int k = 0; k < n; ++k) {
        terms.push_back(random_expr(rng, max_depth - 1));
        negated.push_back(k > 0 && pick(2) == 1);
      }
      return Expr::sum(std::move(terms), std::move(negated));
    }
    case 1: {
      const int n = 2 + pick(2);
      std::vector<Expr> factors;
      for (int k = 0; k < n; ++k) factors.push_back(random_expr(rng, max_depth - 1));
      return Expr::product(std::move(factors));
    }
    case 2:
      return Expr::power(random_expr(rng, max_depth - 1), static_cast<std::uint32_t>(pick(4)));
    case 3:
      return Expr::gen(static_cast<std::size_t>(pick(3)));
    case 4:
      return Expr::norm2();
    case 5:
      return Expr::rational(make_rational(pick(41) - 20, 1 + pick(9)));
    default:
      return Expr::imaginary_unit();
  }
}

CriterionResult check_parser_round_trip(std::size_t count, std::uint64_t seed) {
  Check check;
  std::mt19937_64 rng(seed);
  for (std::size_t n = 0; n < count; ++n) {
    const Expr tree = random_expr(rng, 4);
    const std::string text = print_expr(tree);
    bool ok = false;
    try {
      ok = parse_expr(text) == tree;
    } catch (const Error&) {
      ok = false;
    }
    check.expect(ok, "'" + text + "'");
  }
  return check.result("A10", "parser round-trip over " + std::to_string(count) + " random trees");
}

std::vector<CriterionResult> run_suite(Suite suite) {
  using Entry = std::pair<std::string, std::function<CriterionResult()>>;
  std::vector<Entry> entries;
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Symmetrization) {
    entries.emplace_back("A1", a1_symmetrization_oracle);
    entries.emplace_back("A2", a2_sym_invariants);
    entries.emplace_back("A5", a5_vector_reduction);
    entries.emplace_back("A9", a9_bernoulli_convention);
  }
  if (all || suite == Suite::Duflo) {
    entries.emplace_back("A3", a3_duflo_vectors);
    entries.emplace_back("A4", a4_duflo_isomorphism);
  }
  if (all || suite == Suite::Expmap) {
    entries.emplace_back("A6", a6_expmap_closed_forms);
    entries.emplace_back("A7", a7_cross_series);
    entries.emplace_back("A8", a8_kauffman);
  }
  if (all || suite == Suite::Parser) {
    entries.emplace_back("A10", [] { return check_parser_round_trip(1000, 20260101); });
  }
  std::vector<CriterionResult> results;
  for (const auto& [id, body] : entries) results.push_back(guarded(id, id, body));
  std::sort(results.begin(), results.end(), [](const CriterionResult& a, const CriterionResult& b) {
    return std::stoi(a.id.substr(1)) < std::stoi(b.id.substr(1));
  });
  return results;
}

}  // namespace duflo
