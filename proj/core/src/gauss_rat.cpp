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

#include "duflo/numeric/gauss_rat.hpp"

#include <ostream>

#include "duflo/error.hpp"

namespace duflo {

GaussRat GaussRat::inverse() const {
  if (is_zero()) throw Error(ErrorCode::NotInvertible, "inverse of zero");
  Rational n = norm();
  return GaussRat(Rational(re_ / n), Rational(-im_ / n));
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) { return *this *= o.inverse(); }

std::string to_display(const GaussRat& z) {
  const int re_sign = sgn(z.re());
  const int im_sign = sgn(z.im());
  auto imag = [](const Rational& v) {
    if (v == 1) return std::string("i");
    if (v == -1) return std::string("-i");
    return to_display(v) + "i";
  };
  if (im_sign == 0) return to_display(z.re());
  if (re_sign == 0) return imag(z.im());
  std::string out = to_display(z.re());
  if (im_sign > 0) {
    out += " + " + imag(z.im());
  } else {
    out += " - " + imag(Rational(-z.im()));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) {
  return os << to_display(z);
}

GaussRat pow(const GaussRat& base, unsigned exp) {
  GaussRat result(1);
  GaussRat b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

}  // namespace duflo
