// Copyright 2026 The Authors.
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


// Timing harness for the main computational routes.

#include <benchmark/benchmark.h>

#include "braidkl/cacti.hpp"
#include "braidkl/equivariant.hpp"
#include "braidkl/gfseries.hpp"
#include "braidkl/klcalc.hpp"
#include "braidkl/matroid.hpp"
#include "braidkl/spenum.hpp"

namespace {

using namespace braidkl;

void BM_BraidKlRecursion(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(braid_kl(n));
}
BENCHMARK(BM_BraidKlRecursion)->DenseRange(5, 13, 4);

void BM_GenericKlOnBraid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kl_generic(braid(n)));
}
BENCHMARK(BM_GenericKlOnBraid)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_PartitionLatticeKl(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kl_generic_braid(n));
}
BENCHMARK(BM_PartitionLatticeKl)->DenseRange(6, 7)->Unit(benchmark::kMillisecond);

void BM_SeriesA(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_A(order));
}
BENCHMARK(BM_SeriesA)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SeriesParallelBuild(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_series_parallel_levels(n, EnumerationOptions{}));
}
BENCHMARK(BM_SeriesParallelBuild)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_QspEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enum_qsp(n));
}
BENCHMARK(BM_QspEnumeration)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_Cacti(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enum_triangular_cacti(m));
}
BENCHMARK(BM_Cacti)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_EquivariantBraid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BraidSymmetry sym = braid_symmetry(n);
  for (auto _ : state) benchmark::DoNotOptimize(equivariant_kl(braid(n), sym.on_edges));
}
BENCHMARK(BM_EquivariantBraid)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
