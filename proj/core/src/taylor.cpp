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

#include "duflo/numeric/taylor.hpp"

#include <string>

#include "duflo/error.hpp"

namespace duflo {

ClosedForm parse_closed_form(std::string_view name) {
  if (name == "cos") return ClosedForm::Cos;
  if (name == "sin") return ClosedForm::Sin;
  if (name == "exp_i") return ClosedForm::ExpI;
  if (name == "cosh_of_iu") return ClosedForm::CoshOfIU;
  if (name == "one_minus_cos_over_u") return ClosedForm::OneMinusCosOverU;
  throw Error(ErrorCode::UnknownForm, "unknown closed form '" + std::string(name) + "'");
}

std::string_view to_string(ClosedForm form) {
  switch (form) {
    case ClosedForm::Cos: return "cos";
    case ClosedForm::Sin: return "sin";
    case ClosedForm::ExpI: return "exp_i";
    case ClosedForm::CoshOfIU: return "cosh_of_iu";
    case ClosedForm::OneMinusCosOverU: return "one_minus_cos_over_u";
  }
  return "unknown";
}

namespace {

// Coefficients of exp(i a u): (i a)^n / n!. Real and imaginary parts of this
// give cos and sin.
Series exp_i(const Rational& scale, std::size_t order) {
  Series s(order);
  GaussRat term(1);
  const GaussRat step(Rational(0), scale);
  for (std::size_t n = 0; n < order; ++n) {
    s[n] = term;
    term *= step;
    term /= GaussRat(static_cast<long>(n + 1));
  }
  return s;
}

}  // namespace

Series taylor(ClosedForm form, const Rational& scale, std::size_t order) {
  switch (form) {
    case ClosedForm::ExpI:
      return exp_i(scale, order);
    case ClosedForm::Cos:
    case ClosedForm::CoshOfIU: {
      Series s = exp_i(scale, order);
      for (std::size_t n = 0; n < order; ++n) s[n] = GaussRat(s[n].re());
      return s;
    }
    case ClosedForm::Sin: {
      Series s = exp_i(scale, order);
      for (std::size_t n = 0; n < order; ++n) s[n] = GaussRat(s[n].im());
      return s;
    }
    case ClosedForm::OneMinusCosOverU: {
      Series c = taylor(ClosedForm::Cos, scale, order + 1);
      return divide_by_u(Series::constant(1, order + 1) - c);
    }
  }
  throw Error(ErrorCode::UnknownForm, "unknown closed form");
}

Series taylor(std::string_view name, const Rational& scale, std::size_t order) {
  return taylor(parse_closed_form(name), scale, order);
}

}  // namespace duflo
