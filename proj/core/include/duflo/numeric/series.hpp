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

#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "duflo/numeric/gauss_rat.hpp"

namespace duflo {

/// Number of retained coefficients used when a caller does not choose one.
inline constexpr std::size_t kDefaultSeriesOrder = 16;

/// Truncated formal power series in a single variable u. Coefficient n is the
/// coefficient of u^n; order() coefficients are retained. Binary operations
/// truncate to the smaller order of their operands.
class Series {
 public:
  Series() = default;
  explicit Series(std::size_t order) : coeffs_(order) {}
  explicit Series(std::vector<GaussRat> coeffs) : coeffs_(std::move(coeffs)) {}
  Series(std::initializer_list<GaussRat> coeffs) : coeffs_(coeffs) {}

  static Series constant(const GaussRat& c, std::size_t order);
  /// The series u itself.
  static Series variable(std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size(); }
  const std::vector<GaussRat>& coeffs() const noexcept { return coeffs_; }

  /// Coefficient of u^n; zero beyond the truncation order.
  GaussRat coeff(std::size_t n) const;
  const GaussRat& operator[](std::size_t n) const { return coeffs_[n]; }
  GaussRat& operator[](std::size_t n) { return coeffs_[n]; }

  Series truncated(std::size_t order) const;
  bool is_zero() const;
  /// True iff the series equals the constant c through its order.
  bool equals_constant(const GaussRat& c) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const GaussRat& c);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(Series a) { return a *= GaussRat(-1); }
  friend Series operator*(Series a, const GaussRat& c) { return a *= c; }
  friend Series operator*(const GaussRat& c, Series a) { return a *= c; }
  /// Cauchy product truncated to min(order(a), order(b)).
  friend Series operator*(const Series& a, const Series& b);

  /// Same order and identical coefficients.
  friend bool operator==(const Series& a, const Series& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

 private:
  std::vector<GaussRat> coeffs_;
};

/// Shifts coefficients down by one (division by u). The result has order one
/// less. Throws Error(NonzeroConstantTerm) if a(0) != 0.
Series divide_by_u(const Series& a);

/// Multiplication by u^k, keeping the order.
Series shift_up(const Series& a, std::size_t k);

/// Multiplicative inverse. Throws Error(NotInvertible) if a(0) == 0.
Series inverse(const Series& a);

/// Equality through the first n coefficients (missing ones count as zero).
bool agree_through(const Series& a, const Series& b, std::size_t n);

/// True iff only even (parity 0) or only odd (parity 1) powers are populated.
bool has_parity(const Series& a, unsigned parity);

}  // namespace duflo
