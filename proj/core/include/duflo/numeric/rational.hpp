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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace duflo {

/// Arbitrary-precision rational, always kept canonical by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds p/q in lowest terms. q must be nonzero.
Rational make_rational(long p, long q = 1);
Rational make_rational(const Integer& p, const Integer& q);

/// "p/q" with q > 0, including q == 1 ("3/1"). This is the wire format.
std::string to_wire(const Rational& r);

/// "p" when q == 1, otherwise "p/q". Used by the text and LaTeX emitters.
std::string to_display(const Rational& r);

/// Accepts "p", "p/q", optionally signed. Throws Error(InvalidArgument).
Rational parse_rational(std::string_view text);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// base^exp for a nonnegative exponent.
Rational pow(const Rational& base, unsigned exp);

}  // namespace duflo
