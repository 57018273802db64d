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

#include "dm/count.hpp"

#include <gmpxx.h>

#include <string>

#include "dm/error.hpp"

namespace dm {
namespace {

mpz_class ToMpz(std::uint64_t v) {
  mpz_class out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

}  // namespace

std::vector<CountReport> CountReports(LevelStore& store, int n_max,
                                      const CountOptions& options) {
  if (n_max > kMaxListedLevel + 1 ||
      (n_max > kMaxListedLevel && !options.allow_n6)) {
    throw Error(ErrorCode::kResourceLimit,
                "counting beyond n = " + std::to_string(kMaxListedLevel) +
                    " needs the n = 6 flag and stops at 6");
  }
  if (n_max < 1) {
    throw Error(ErrorCode::kPrecondition, "max n must be at least 1");
  }
  std::vector<CountReport> reports;
  for (int n = 1; n <= n_max; ++n) {
    CountReport report;
    report.n = n;
    if (n <= kMaxListedLevel) {
      const LevelCache& level = store.Level(n);
      report.d_n = level.size();
      if (options.with_even) report.e_n = CountEven(level).total;
    } else {
      report.d_n = CountLevelByClasses(store.Level(n - 1), store.options());
    }
    report.gamma = Gamma(n, report.d_n);
    mpz_class lower;
    mpz_ui_pow_ui(lower.get_mpz_t(), 2, 1ul << (n - 1));
    report.meets_even_plus_odd_bound = ToMpz(report.d_n) >= lower;
    if (!reports.empty()) {
      const mpz_class prev = ToMpz(reports.back().d_n) + 1;
      report.below_square_of_previous = ToMpz(report.d_n) + 1 < prev * prev;
    }
    reports.push_back(report);
  }
  return reports;
}

bool GammaSeriesIsValid(const std::vector<CountReport>& reports) {
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (!(reports[i].gamma > 0.0)) return false;
    if (i > 0 && reports[i].n >= 3 &&
        !(reports[i].gamma < reports[i - 1].gamma)) {
      return false;
    }
  }
  return true;
}

EvenCount CountEvenAt(LevelStore& store, int n) {
  if (n < 0 || n > kMaxListedLevel) {
    throw Error(ErrorCode::kCacheUnavailable,
                "no level cache for n = " + std::to_string(n));
  }
  return CountEven(store.Level(n));
}

}  // namespace dm
