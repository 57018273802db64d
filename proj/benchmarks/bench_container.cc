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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dm/construct.hpp"
#include "dm/encode.hpp"

namespace {

void BM_KwEncode(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const dm::RegularGraph g = dm::RnComponent(n, dm::Parity::kEven);
  const dm::Fraction alpha = dm::ContainerAlpha(g.degree(), -dm::SmallestEigenvalue(n));
  std::mt19937_64 rng(5);
  std::vector<dm::Mask> l;
  for (dm::Mask m : g.labels()) {
    if (rng() % 2) l.push_back(m);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(dm::KwEncode(g, l, alpha));
  }
}
BENCHMARK(BM_KwEncode)->DenseRange(6, 12, 2);

void BM_EncodeDecode(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(6);
  const dm::SetSystem d = dm::StackedEvenDeltaMatroid(n, dm::RandomStackedLayers(n, rng));
  for (auto _ : state) {
    const dm::EncodingRecord r = dm::EncodeEvenDeltaMatroid(d);
    benchmark::DoNotOptimize(dm::ReconstructEvenDeltaMatroid(r));
  }
}
BENCHMARK(BM_EncodeDecode)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_RnMatrixIdentity(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(dm::RnMatrixIdentity(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_RnMatrixIdentity)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
