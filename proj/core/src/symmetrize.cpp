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

#include "duflo/quantmaps/symmetrize.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "duflo/error.hpp"

namespace duflo {
namespace {

class Symmetrizer {
 public:
  explicit Symmetrizer(const PbwAlgebra& algebra) : algebra_(algebra) {}

  std::shared_ptr<const UEAElem> monomial(const Exponent& m) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = cache_.find(m); it != cache_.end()) return it->second;
    }
    UEAElem result;
    const unsigned n = degree(m);
    if (n == 0) {
      result = UEAElem::constant(1);
    } else {
      for (std::size_t i = 0; i < kRank; ++i) {
        if (m[i] == 0) continue;
        Exponent rest = m;
        rest[i] -= 1;
        result.add_scaled(algebra_.left_multiply(i, *monomial(rest)),
                          GaussRat(make_rational(m[i], n)));
      }
    }
    auto value = std::make_shared<const UEAElem>(std::move(result));
    std::unique_lock lock(mutex_);
    return cache_.try_emplace(m, std::move(value)).first->second;
  }

  UEAElem apply(const SymPoly& p) {
    UEAElem out;
    for (const auto& [e, c] : p.terms()) out.add_scaled(*monomial(e), c);
    return out;
  }

 private:
  const PbwAlgebra& algebra_;
  std::shared_mutex mutex_;
  std::map<Exponent, std::shared_ptr<const UEAElem>> cache_;
};

Symmetrizer& su2_symmetrizer() {
  static Symmetrizer s(PbwAlgebra::su2());
  return s;
}

}  // namespace

UEAElem q_sym(const SymPoly& p) { return su2_symmetrizer().apply(p); }

UEAElem q_sym(const SymPoly& p, const PbwAlgebra& algebra) {
  if (&algebra == &PbwAlgebra::su2()) return q_sym(p);
  Symmetrizer local(algebra);
  return local.apply(p);
}

UEAElem q_sym_bruteforce(const SymPoly& p, const PbwAlgebra& algebra) {
  if (p.degree() > kBruteforceMaxDegree) {
    throw Error(ErrorCode::DegreeTooLarge,
                "brute-force symmetrization is limited to degree " +
                    std::to_string(kBruteforceMaxDegree));
  }
  UEAElem out;
  for (const auto& [e, c] : p.terms()) {
    std::vector<std::size_t> word;
    for (std::size_t i = 0; i < kRank; ++i) word.insert(word.end(), e[i], i);
    // word starts sorted, so next_permutation visits each distinct word once.
    UEAElem sum;
    long count = 0;
    do {
      UEAElem product = UEAElem::constant(1);
      for (std::size_t letter : word) product = algebra.right_multiply(product, letter);
      sum += product;
      ++count;
    } while (std::next_permutation(word.begin(), word.end()));
    out.add_scaled(sum, c / GaussRat(count));
  }
  return out;
}

UEAElem q_sym_invariant_closed(unsigned k, BernoulliKind kind) {
  // Collect the result as a polynomial in Delta, then expand once.
  std::vector<GaussRat> in_delta(k + 1);
  for (unsigned m = 0; m <= k; ++m) {
    const Rational weight = Rational(binomial(2 * k + 1, 2 * m)) * bernoulli(2 * m, kind) *
                            (pow(Rational(2), 2 * m) - 2);
    const unsigned j = k - m;
    for (unsigned t = 0; t <= j; ++t) {
      in_delta[t] += GaussRat(Rational(weight * Rational(binomial(j, t)) * pow(Rational(8), t)));
    }
  }
  const GaussRat scale(Rational(-1 / pow(Rational(8), k)));
  for (auto& c : in_delta) c *= scale;
  return PbwAlgebra::su2().from_casimir_polynomial(in_delta);
}

Rational spinhalf_sym_invariant_expanded(unsigned k, BernoulliKind kind) {
  Rational first(0);
  Rational second(0);
  for (unsigned m = 0; m <= 2 * k; ++m) {
    const Rational term = Rational(binomial(2 * k + 1, m)) * bernoulli(m, kind);
    first += term;
    second += term * pow(Rational(2), 2 * k - m + 1);
  }
  return Rational(-first / pow(Rational(2), k) + second / pow(Rational(8), k));
}

}  // namespace duflo
