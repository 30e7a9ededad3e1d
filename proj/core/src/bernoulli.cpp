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

#include "duflo/numeric/bernoulli.hpp"

#include <mutex>
#include <shared_mutex>
#include <vector>

namespace duflo {
namespace {

class BernoulliTable {
 public:
  Rational get(unsigned n) {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    if (values_.empty()) values_.emplace_back(1);
    while (values_.size() <= n) {
      const auto m = static_cast<unsigned>(values_.size());
      Rational acc(0);
      for (unsigned k = 0; k < m; ++k) {
        acc += Rational(binomial(m + 1, k)) * values_[k];
      }
      Rational next = -acc / Rational(m + 1);
      values_.push_back(std::move(next));
    }
    return values_[n];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<Rational> values_;
};

BernoulliTable& table() {
  static BernoulliTable t;
  return t;
}

}  // namespace

Rational bernoulli(unsigned n, BernoulliKind kind) {
  if (n == 1 && kind == BernoulliKind::Second) return make_rational(1, 2);
  return table().get(n);
}

}  // namespace duflo
