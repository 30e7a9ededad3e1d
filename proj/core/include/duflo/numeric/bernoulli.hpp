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

#include "duflo/numeric/rational.hpp"

namespace duflo {

/// The two common conventions only differ in the sign of B_1.
enum class BernoulliKind {
  First,   // B_1 = -1/2
  Second,  // B_1 = +1/2
};

/// B_n from the recurrence sum_{k=0}^{m} C(m+1, k) B_k = 0. Values are cached
/// process-wide; concurrent callers are safe.
Rational bernoulli(unsigned n, BernoulliKind kind = BernoulliKind::First);

}  // namespace duflo
