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

#include "duflo/uea/pbw.hpp"

#include <mutex>

#include "duflo/error.hpp"

namespace duflo {

PbwAlgebra::PbwAlgebra(LieData lie) : lie_(std::move(lie)) {
  if (lie_.dim() != kRank) {
    throw Error(ErrorCode::UnsupportedAlgebra, "PBW arithmetic needs a 3-dimensional algebra");
  }
}

const PbwAlgebra& PbwAlgebra::su2() {
  static const PbwAlgebra algebra(LieData::su2());
  return algebra;
}

PbwAlgebra::Cached PbwAlgebra::monomial_times_generator(const Exponent& m,
                                                        std::size_t i) const {
  const auto key = std::make_pair(m, i);
  {
    std::shared_lock lock(mutex_);
    if (auto it = right_cache_.find(key); it != right_cache_.end()) return it->second;
  }

  // Last letter of the monomial.
  std::size_t last = kRank;
  for (std::size_t j = kRank; j-- > 0;) {
    if (m[j] > 0) {
      last = j;
      break;
    }
  }

  UEAElem result;
  if (last == kRank || last <= i) {
    result.add_term(m + unit_exponent(i), 1);
  } else {
    // X Ê_j Ê_i = (X Ê_i) Ê_j + f_{ji}^k X Ê_k
    Exponent rest = m;
    rest[last] -= 1;
    Cached head = monomial_times_generator(rest, i);
    for (const auto& [t, c] : head->terms()) {
      result.add_scaled(*monomial_times_generator(t, last), c);
    }
    for (std::size_t k = 0; k < kRank; ++k) {
      if (sgn(lie_.f(last, i, k)) == 0) continue;
      result.add_scaled(*monomial_times_generator(rest, k), GaussRat(lie_.f(last, i, k)));
    }
  }

  auto value = std::make_shared<const UEAElem>(std::move(result));
  std::unique_lock lock(mutex_);
  return right_cache_.try_emplace(key, std::move(value)).first->second;
}

PbwAlgebra::Cached PbwAlgebra::generator_times_monomial(std::size_t i,
                                                        const Exponent& m) const {
  const auto key = std::make_pair(i, m);
  {
    std::shared_lock lock(mutex_);
    if (auto it = left_cache_.find(key); it != left_cache_.end()) return it->second;
  }

  std::size_t first = kRank;
  for (std::size_t j = 0; j < kRank; ++j) {
    if (m[j] > 0) {
      first = j;
      break;
    }
  }

  UEAElem result;
  if (first == kRank || i <= first) {
    result.add_term(m + unit_exponent(i), 1);
  } else {
    // Ê_i Ê_j Y = Ê_j (Ê_i Y) + f_{ij}^k Ê_k Y
    Exponent rest = m;
    rest[first] -= 1;
    Cached tail = generator_times_monomial(i, rest);
    for (const auto& [t, c] : tail->terms()) {
      result.add_scaled(*generator_times_monomial(first, t), c);
    }
    for (std::size_t k = 0; k < kRank; ++k) {
      if (sgn(lie_.f(i, first, k)) == 0) continue;
      result.add_scaled(*generator_times_monomial(k, rest), GaussRat(lie_.f(i, first, k)));
    }
  }

  auto value = std::make_shared<const UEAElem>(std::move(result));
  std::unique_lock lock(mutex_);
  return left_cache_.try_emplace(key, std::move(value)).first->second;
}

UEAElem PbwAlgebra::right_multiply(const UEAElem& x, std::size_t i) const {
  if (i >= kRank) throw Error(ErrorCode::IndexOutOfRange, "generator index out of range");
  UEAElem out;
  for (const auto& [m, c] : x.terms()) out.add_scaled(*monomial_times_generator(m, i), c);
  return out;
}

UEAElem PbwAlgebra::left_multiply(std::size_t i, const UEAElem& x) const {
  if (i >= kRank) throw Error(ErrorCode::IndexOutOfRange, "generator index out of range");
  UEAElem out;
  for (const auto& [m, c] : x.terms()) out.add_scaled(*generator_times_monomial(i, m), c);
  return out;
}

UEAElem PbwAlgebra::multiply(const UEAElem& x, const UEAElem& y) const {
  UEAElem out;
  for (const auto& [my, cy] : y.terms()) {
    // x * Ê_1^a Ê_2^b Ê_3^c by appending the letters of the right factor.
    UEAElem acc = x;
    for (std::size_t k = 0; k < kRank; ++k) {
      for (std::uint32_t r = 0; r < my[k]; ++r) acc = right_multiply(acc, k);
    }
    out.add_scaled(acc, cy);
  }
  return out;
}

UEAElem PbwAlgebra::commutator(const UEAElem& x, const UEAElem& y) const {
  return multiply(x, y) - multiply(y, x);
}

UEAElem PbwAlgebra::power(const UEAElem& x, unsigned n) const {
  UEAElem out = UEAElem::constant(1);
  for (unsigned r = 0; r < n; ++r) out = multiply(out, x);
  return out;
}

UEAElem PbwAlgebra::casimir() const {
  UEAElem out;
  for (std::size_t i = 0; i < kRank; ++i) {
    for (std::size_t j = 0; j < kRank; ++j) {
      if (sgn(lie_.kappa_inv(i, j)) == 0) continue;
      out.add_scaled(right_multiply(UEAElem::generator(i), j), GaussRat(lie_.kappa_inv(i, j)));
    }
  }
  return out;
}

UEAElem PbwAlgebra::casimir_power(unsigned m) const {
  {
    std::shared_lock lock(mutex_);
    if (m < casimir_powers_.size()) return casimir_powers_[m];
  }
  const UEAElem delta = casimir();
  std::unique_lock lock(mutex_);
  if (casimir_powers_.empty()) casimir_powers_.push_back(UEAElem::constant(1));
  while (casimir_powers_.size() <= m) {
    // multiply() takes the shared lock internally, so compute unlocked.
    UEAElem prev = casimir_powers_.back();
    const std::size_t have = casimir_powers_.size();
    lock.unlock();
    UEAElem next = multiply(prev, delta);
    lock.lock();
    if (casimir_powers_.size() == have) casimir_powers_.push_back(std::move(next));
  }
  return casimir_powers_[m];
}

bool PbwAlgebra::is_central(const UEAElem& x) const {
  for (std::size_t i = 0; i < kRank; ++i) {
    if (left_multiply(i, x) != right_multiply(x, i)) return false;
  }
  return true;
}

std::vector<GaussRat> PbwAlgebra::center_decompose(const UEAElem& x) const {
  if (!is_central(x)) throw Error(ErrorCode::NotCentral, "element is not central");
  std::vector<GaussRat> coeffs;
  UEAElem residual = x;
  while (!residual.is_zero()) {
    const unsigned d = residual.degree();
    if (d % 2 != 0) {
      throw Error(ErrorCode::NotPolynomialInCasimir, "odd-degree central residual");
    }
    const unsigned m = d / 2;
    const UEAElem delta_m = casimir_power(m);
    const UEAElem top = delta_m.homogeneous_part(d);
    const auto& [lead, lead_coeff] = *top.terms().rbegin();
    const GaussRat c = residual.coeff(lead) / lead_coeff;
    residual.add_scaled(delta_m, -c);
    if (!residual.homogeneous_part(d).is_zero()) {
      throw Error(ErrorCode::NotPolynomialInCasimir,
                  "central element is not a polynomial in the Casimir");
    }
    if (coeffs.size() <= m) coeffs.resize(m + 1);
    coeffs[m] = c;
  }
  return coeffs;
}

UEAElem PbwAlgebra::from_casimir_polynomial(const std::vector<GaussRat>& coeffs) const {
  UEAElem out;
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    out.add_scaled(casimir_power(static_cast<unsigned>(m)), coeffs[m]);
  }
  return out;
}

UEAElem pbw_mul(const UEAElem& x, const UEAElem& y) { return PbwAlgebra::su2().multiply(x, y); }
UEAElem casimir() { return PbwAlgebra::su2().casimir(); }
bool is_central(const UEAElem& x) { return PbwAlgebra::su2().is_central(x); }
std::vector<GaussRat> center_decompose(const UEAElem& x) {
  return PbwAlgebra::su2().center_decompose(x);
}

}  // namespace duflo
