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
#include "dm/set_system.hpp"

namespace {

// Axiom check on stacked even delta-matroids (every check passes, so the
// full scan runs).
void BM_CheckStacked(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  const dm::SetSystem s = dm::StackedEvenDeltaMatroid(n, dm::RandomStackedLayers(n, rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dm::CheckSymmetricExchange(s));
  }
  state.counters["feasible"] = static_cast<double>(s.size());
}
BENCHMARK(BM_CheckStacked)->DenseRange(4, 12, 2);

// Random dense systems usually fail early.
void BM_CheckRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(2);
  std::vector<dm::SetSystem> systems;
  for (int i = 0; i < 64; ++i) {
    std::vector<dm::Mask> masks;
    for (dm::Mask m = 0; m <= dm::FullMask(n); ++m) {
      if (rng() % 2) masks.push_back(m);
    }
    systems.push_back(dm::SetSystem::FromMasks(n, masks));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dm::IsDeltaMatroid(systems[i++ % systems.size()]));
  }
}
BENCHMARK(BM_CheckRandom)->DenseRange(4, 10, 2);

void BM_MinorWord(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const dm::SetSystem s = dm::SetSystem::FromWord(6, rng());
  for (auto _ : state) {
    for (dm::Element e = 1; e <= 6; ++e) {
      benchmark::DoNotOptimize(dm::Minor(s, e, dm::MinorKind::kContract));
    }
  }
}
BENCHMARK(BM_MinorWord);

}  // namespace

BENCHMARK_MAIN();
