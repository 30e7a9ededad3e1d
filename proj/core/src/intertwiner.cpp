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

#include "duflo/expmap/intertwiner.hpp"

#include <string>

#include "duflo/error.hpp"
#include "duflo/rep/spin_half.hpp"

namespace duflo {
namespace {

constexpr long kEps[2][2] = {{0, 1}, {-1, 0}};

long delta(std::size_t a, std::size_t b) { return a == b ? 1 : 0; }

template <typename F>
Mat4 from_indices(F f) {
  Mat4 m;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t c = 0; c < 2; ++c) {
      for (std::size_t d = 0; d < 2; ++d) {
        for (std::size_t b = 0; b < 2; ++b) m(2 * a + c, 2 * d + b) = f(a, c, d, b);
      }
    }
  }
  return m;
}

GaussRat pairing(const Mat4& x, const Mat4& y) {
  GaussRat acc;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) acc += x(r, c) * y(r, c);
  }
  return acc;
}

}  // namespace

Mat4 delta_ad_cb() {
  return from_indices([](auto a, auto c, auto d, auto b) { return delta(a, d) * delta(c, b); });
}

Mat4 delta_ab_cd() {
  return from_indices([](auto a, auto c, auto d, auto b) { return delta(a, b) * delta(c, d); });
}

Mat4 minus_eps_eps() {
  return from_indices([](auto a, auto c, auto d, auto b) { return -kEps[a][c] * kEps[b][d]; });
}

std::pair<Series, Series> decompose_in_span(const Mat4Series& m, const Mat4& b1,
                                            const Mat4& b2) {
  const GaussRat g11 = pairing(b1, b1);
  const GaussRat g12 = pairing(b1, b2);
  const GaussRat g22 = pairing(b2, b2);
  const GaussRat det = g11 * g22 - g12 * g12;
  if (det.is_zero()) throw Error(ErrorCode::InvalidArgument, "basis matrices are dependent");
  Series c1(m.order());
  Series c2(m.order());
  for (std::size_t n = 0; n < m.order(); ++n) {
    const GaussRat r1 = pairing(b1, m[n]);
    const GaussRat r2 = pairing(b2, m[n]);
    c1[n] = (g22 * r1 - g12 * r2) / det;
    c2[n] = (g11 * r2 - g12 * r1) / det;
    const Mat4 residual = m[n] - b1 * c1[n] - b2 * c2[n];
    if (!residual.is_zero()) {
      throw Error(ErrorCode::ResidualNotInSpan,
                  "u^" + std::to_string(n) + " coefficient is outside the two-element span");
    }
  }
  return {std::move(c1), std::move(c2)};
}

PauliDecomposition decompose_pauli(const Mat4Series& m) {
  auto [alpha, beta] = decompose_in_span(m, Mat4::identity(), tensor_sum_tau());
  return {std::move(alpha), std::move(beta)};
}

std::string_view to_string(IntertwinerBasis basis) {
  return basis == IntertwinerBasis::Epsilon ? "epsilon" : "swap";
}

IntertwinerBasis parse_intertwiner_basis(std::string_view name) {
  if (name == "epsilon") return IntertwinerBasis::Epsilon;
  if (name == "swap") return IntertwinerBasis::Swap;
  throw Error(ErrorCode::InvalidArgument, "unknown basis '" + std::string(name) + "'");
}

std::pair<Series, Series> to_intertwiner(const Mat4Series& m, IntertwinerBasis basis) {
  switch (basis) {
    case IntertwinerBasis::Epsilon:
      return decompose_in_span(m, delta_ab_cd(), minus_eps_eps());
    case IntertwinerBasis::Swap:
      return decompose_in_span(m, delta_ab_cd(), delta_ad_cb());
  }
  throw Error(ErrorCode::InvalidArgument, "unknown basis");
}

std::pair<Series, Series> epsilon_to_swap(const std::pair<Series, Series>& eps) {
  return {eps.first - eps.second, eps.second};
}

}  // namespace duflo
