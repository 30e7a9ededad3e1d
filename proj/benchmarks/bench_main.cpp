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

#include <benchmark/benchmark.h>

#include "duflo/expmap/quantized.hpp"
#include "duflo/expmap/skein.hpp"
#include "duflo/liesym/calculus.hpp"
#include "duflo/quantmaps/quantize.hpp"
#include "duflo/quantmaps/symmetrize.hpp"
#include "duflo/uea/pbw.hpp"

namespace {

using namespace duflo;

// Fresh algebra per iteration so cached products do not hide the cost.
void BM_QSymNormPower(benchmark::State& state) {
  const SymPoly p = norm_sq_power(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    PbwAlgebra algebra(LieData::su2());
    benchmark::DoNotOptimize(q_sym(p, algebra));
  }
}
BENCHMARK(BM_QSymNormPower)->DenseRange(1, 5);

void BM_QSymBruteforce(benchmark::State& state) {
  const SymPoly p = norm_sq_power(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    PbwAlgebra algebra(LieData::su2());
    benchmark::DoNotOptimize(q_sym_bruteforce(p, algebra));
  }
}
BENCHMARK(BM_QSymBruteforce)->DenseRange(1, 4);

void BM_PbwMulCasimirPowers(benchmark::State& state) {
  const unsigned m = static_cast<unsigned>(state.range(0));
  const UEAElem a = PbwAlgebra::su2().casimir_power(m);
  const UEAElem b = PbwAlgebra::su2().casimir_power(m) + UEAElem::generator(0);
  for (auto _ : state) {
    PbwAlgebra algebra(LieData::su2());
    benchmark::DoNotOptimize(algebra.multiply(a, b));
  }
}
BENCHMARK(BM_PbwMulCasimirPowers)->DenseRange(1, 3);

void BM_QDufloNormPower(benchmark::State& state) {
  const SymPoly p = norm_sq_power(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(q_duflo(p));
}
BENCHMARK(BM_QDufloNormPower)->DenseRange(1, 5);

void BM_QuantizedExp(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quantized_exp(MapKind::Duflo, order));
}
BENCHMARK(BM_QuantizedExp)->Arg(6)->Arg(9)->Arg(11);

void BM_NouiCrossSeries(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(noui_cross_series(MapKind::Sym, order));
}
BENCHMARK(BM_NouiCrossSeries)->Arg(6)->Arg(9);

void BM_KauffmanCheck(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_check(MapKind::Npp, 11));
}
BENCHMARK(BM_KauffmanCheck);

}  // namespace

BENCHMARK_MAIN();
