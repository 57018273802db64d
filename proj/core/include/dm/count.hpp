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

#ifndef DM_COUNT_HPP_
#define DM_COUNT_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "dm/level_store.hpp"

namespace dm {

struct CountOptions {
  bool with_even = false;
  // Admits n_max = 6, counted through twist classes of level 5.
  bool allow_n6 = false;
};

struct CountReport {
  int n = 0;
  std::uint64_t d_n = 0;
  std::optional<std::uint64_t> e_n;
  double gamma = 0.0;
  // d_n >= 2^(2^(n-1)).
  bool meets_even_plus_odd_bound = false;
  // d_n + 1 < (d_{n-1} + 1)^2; unset for n = 1.
  std::optional<bool> below_square_of_previous;
};

// One report per level 1..n_max. Throws kResourceLimit when n_max > 5 without
// allow_n6, and for n_max > 6 in any case.
std::vector<CountReport> CountReports(LevelStore& store, int n_max,
                                      const CountOptions& options = {});

// Gamma strictly decreasing from n = 2 on and positive throughout.
bool GammaSeriesIsValid(const std::vector<CountReport>& reports);

// e_n for n <= 5 from the level cache.
EvenCount CountEvenAt(LevelStore& store, int n);

}  // namespace dm

#endif  // DM_COUNT_HPP_
