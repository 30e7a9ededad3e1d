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
#include <string_view>

#include "duflo/numeric/rational.hpp"
#include "duflo/numeric/series.hpp"

namespace duflo {

/// Closed-form functions of the scaled argument a*u with exactly known
/// Taylor coefficients.
enum class ClosedForm {
  Cos,               // cos(a u)
  Sin,               // sin(a u)
  ExpI,              // exp(i a u)
  CoshOfIU,          // cosh(i a u), identical to cos(a u)
  OneMinusCosOverU,  // (1 - cos(a u)) / u
};

/// Names accepted: cos, sin, exp_i, cosh_of_iu, one_minus_cos_over_u.
/// Throws Error(UnknownForm) otherwise.
ClosedForm parse_closed_form(std::string_view name);
std::string_view to_string(ClosedForm form);

Series taylor(ClosedForm form, const Rational& scale, std::size_t order);
Series taylor(std::string_view name, const Rational& scale, std::size_t order);

}  // namespace duflo
