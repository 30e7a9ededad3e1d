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

#include <iosfwd>
#include <string>

#include "duflo/numeric/rational.hpp"

namespace duflo {

/// Exact Gaussian rational re + i*im. The coefficient field of every algebra
/// in this library.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(int value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussRat(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat imaginary_unit() { return GaussRat(Rational(0), Rational(1)); }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  /// |z|^2 as a rational.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  /// Multiplicative inverse. Throws Error(NotInvertible) on zero.
  GaussRat inverse() const;

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend GaussRat operator-(const GaussRat& a) { return GaussRat(-a.re_, -a.im_); }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Compact form such as "3/2", "-i" or "1/2 - 3/4i".
std::string to_display(const GaussRat& z);

std::ostream& operator<<(std::ostream& os, const GaussRat& z);

GaussRat pow(const GaussRat& base, unsigned exp);

}  // namespace duflo
