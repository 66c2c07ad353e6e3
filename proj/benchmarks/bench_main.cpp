// Copyright 2026 The StripComplex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <benchmark/benchmark.h>

#include "stripcomplex/sampling.h"
#include "stripcomplex/strips.h"

using namespace stripcomplex;

namespace {

Kind kind_arg(int k) { return static_cast<Kind>(k); }

void BM_EnumerateComplex(benchmark::State& state) {
  const Kind kind = kind_arg(static_cast<int>(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    const ArcComplex ac(kind, n);
    benchmark::DoNotOptimize(ac.top_simplices().size());
  }
}
BENCHMARK(BM_EnumerateComplex)->Args({0, 8})->Args({0, 10})->Args({1, 5})->Args({2, 4})->Args({3, 3});

void BM_InfinitesimalStrip(benchmark::State& state) {
  const Kind kind = kind_arg(static_cast<int>(state.range(0)));
  Rng rng(1);
  const PolygonMetric m = random_metric(kind, 5, rng);
  const auto arcs = enumerate_arcs(kind, 5);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(infinitesimal_strip(m, arcs[i++ % arcs.size()]).d.data());
  }
}
BENCHMARK(BM_InfinitesimalStrip)->DenseRange(0, 3);

void BM_BasisMatrix(benchmark::State& state) {
  const Kind kind = kind_arg(static_cast<int>(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  Rng rng(2);
  const PolygonMetric m = random_metric(kind, n, rng);
  const ArcComplex ac(kind, n);
  const Simplex s = random_top_simplex(ac, rng);
  std::vector<ArcClass> arcs;
  for (int a : s) arcs.push_back(ac.arcs()[a]);
  for (auto _ : state) benchmark::DoNotOptimize(basis_matrix(m, arcs).det);
}
BENCHMARK(BM_BasisMatrix)->Args({0, 8})->Args({1, 6})->Args({2, 5})->Args({3, 4});

void BM_StripMap(benchmark::State& state) {
  const ArcComplex ac(Kind::kDecorated, 5);
  Rng rng(3);
  const PolygonMetric m = random_metric(Kind::kDecorated, 5, rng);
  const BarycentricPoint x = random_interior_point(ac, random_filling_simplex(ac, rng), rng);
  for (auto _ : state) benchmark::DoNotOptimize(strip_map(m, x, {}, true).d.data());
}
BENCHMARK(BM_StripMap);

}  // namespace

BENCHMARK_MAIN();
