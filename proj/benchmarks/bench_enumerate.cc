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

#include "dm/enumerate.hpp"
#include "dm/level_store.hpp"

namespace {

dm::LevelStore& Store() {
  static dm::LevelStore store;
  return store;
}

void BM_EnumerateLevel(benchmark::State& state) {
  const int target = static_cast<int>(state.range(0));
  const dm::LevelCache& prev = Store().Level(target - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dm::EnumerateLevel(prev));
  }
  state.counters["candidates"] =
      static_cast<double>((prev.size() + 1) * (prev.size() + 1) - 1);
}
BENCHMARK(BM_EnumerateLevel)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_ComposedCandidate(benchmark::State& state) {
  const dm::LevelCache& four = Store().Level(4);
  std::mt19937_64 rng(4);
  std::vector<dm::bits::Word> candidates;
  for (int i = 0; i < 4096; ++i) {
    candidates.push_back(dm::bits::Compose(four.systems()[rng() % four.size()],
                                           four.systems()[rng() % four.size()], 5));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        dm::ComposedCandidateIsDeltaMatroid(candidates[i++ % candidates.size()], 5, four));
  }
}
BENCHMARK(BM_ComposedCandidate);

void BM_CanonicalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const dm::LevelCache& level = Store().Level(n);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dm::CanonicalForm(level.systems()[i++ % level.size()], n));
  }
}
BENCHMARK(BM_CanonicalForm)->Arg(4)->Arg(5);

void BM_CountLevelByClasses(benchmark::State& state) {
  const dm::LevelCache& four = Store().Level(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dm::CountLevelByClasses(four));
  }
}
BENCHMARK(BM_CountLevelByClasses)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
