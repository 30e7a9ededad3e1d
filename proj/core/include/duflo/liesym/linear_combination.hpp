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

#include <algorithm>
#include <map>
#include <utility>

#include "duflo/liesym/exponent.hpp"
#include "duflo/numeric/gauss_rat.hpp"

namespace duflo {

/// Finitely supported map Exponent -> GaussRat with no stored zeros. Shared
/// additive structure of SymPoly and UEAElem; the derived class supplies the
/// product.
template <typename Derived>
class LinearCombination {
 public:
  using Terms = std::map<Exponent, GaussRat>;

  LinearCombination() = default;

  static Derived constant(const GaussRat& c) {
    Derived d;
    d.add_term(Exponent{}, c);
    return d;
  }
  static Derived monomial(const Exponent& e, const GaussRat& c = GaussRat(1)) {
    Derived d;
    d.add_term(e, c);
    return d;
  }

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  GaussRat coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussRat() : it->second;
  }

  /// Highest total degree present; 0 for the zero element.
  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, duflo::degree(e));
    return d;
  }

  /// Terms of total degree exactly d.
  Derived homogeneous_part(unsigned d) const {
    Derived out;
    for (const auto& [e, c] : terms_) {
      if (duflo::degree(e) == d) out.terms_.emplace(e, c);
    }
    return out;
  }

  void add_term(const Exponent& e, const GaussRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Derived& operator+=(const Derived& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return self();
  }
  Derived& operator-=(const Derived& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return self();
  }
  Derived& operator*=(const GaussRat& s) {
    if (s.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return self();
  }

  /// out += s * o, without materialising s * o.
  void add_scaled(const Derived& o, const GaussRat& s) {
    if (s.is_zero()) return;
    for (const auto& [e, c] : o.terms_) add_term(e, c * s);
  }

  friend Derived operator+(Derived a, const Derived& b) { return a += b; }
  friend Derived operator-(Derived a, const Derived& b) { return a -= b; }
  friend Derived operator-(Derived a) { return a *= GaussRat(-1); }
  friend Derived operator*(Derived a, const GaussRat& s) { return a *= s; }
  friend Derived operator*(const GaussRat& s, Derived a) { return a *= s; }

  friend bool operator==(const Derived& a, const Derived& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Derived& a, const Derived& b) { return !(a == b); }

 protected:
  Terms terms_;

 private:
  Derived& self() { return static_cast<Derived&>(*this); }
};

}  // namespace duflo
