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

#include "duflo/numeric/series.hpp"

#include <algorithm>

#include "duflo/error.hpp"

namespace duflo {

Series Series::constant(const GaussRat& c, std::size_t order) {
  Series s(order);
  if (order > 0) s.coeffs_[0] = c;
  return s;
}

Series Series::variable(std::size_t order) {
  Series s(order);
  if (order > 1) s.coeffs_[1] = 1;
  return s;
}

GaussRat Series::coeff(std::size_t n) const {
  return n < coeffs_.size() ? coeffs_[n] : GaussRat();
}

Series Series::truncated(std::size_t order) const {
  Series s(std::min(order, this->order()));
  std::copy_n(coeffs_.begin(), s.order(), s.coeffs_.begin());
  return s;
}

bool Series::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const GaussRat& c) { return c.is_zero(); });
}

bool Series::equals_constant(const GaussRat& c) const {
  if (coeffs_.empty()) return true;
  if (coeffs_[0] != c) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const GaussRat& x) { return x.is_zero(); });
}

Series& Series::operator+=(const Series& o) {
  coeffs_.resize(std::min(order(), o.order()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  coeffs_.resize(std::min(order(), o.order()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

Series& Series::operator*=(const GaussRat& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  const std::size_t order = std::min(a.order(), b.order());
  Series out(order);
  for (std::size_t i = 0; i < order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < order; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

Series divide_by_u(const Series& a) {
  if (a.order() == 0) return a;
  if (!a[0].is_zero()) {
    throw Error(ErrorCode::NonzeroConstantTerm,
                "cannot divide by u: constant term is " + to_display(a[0]));
  }
  std::vector<GaussRat> c(a.coeffs().begin() + 1, a.coeffs().end());
  return Series(std::move(c));
}

Series shift_up(const Series& a, std::size_t k) {
  Series out(a.order());
  for (std::size_t n = k; n < a.order(); ++n) out[n] = a[n - k];
  return out;
}

Series inverse(const Series& a) {
  if (a.order() == 0) return a;
  if (a[0].is_zero()) {
    throw Error(ErrorCode::NotInvertible, "series with zero constant term");
  }
  const GaussRat inv0 = a[0].inverse();
  Series out(a.order());
  out[0] = inv0;
  for (std::size_t n = 1; n < a.order(); ++n) {
    GaussRat acc;
    for (std::size_t k = 1; k <= n; ++k) acc += a[k] * out[n - k];
    out[n] = -acc * inv0;
  }
  return out;
}

bool agree_through(const Series& a, const Series& b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    if (a.coeff(k) != b.coeff(k)) return false;
  }
  return true;
}

bool has_parity(const Series& a, unsigned parity) {
  for (std::size_t n = 0; n < a.order(); ++n) {
    if ((n % 2) != parity && !a[n].is_zero()) return false;
  }
  return true;
}

}  // namespace duflo
