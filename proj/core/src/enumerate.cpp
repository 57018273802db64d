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

#include "dm/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>
#include <utility>

#include "dm/error.hpp"

namespace dm {
namespace {

using bits::Word;

constexpr int kMaxEnumeratedLevel = 5;
constexpr int kFirstFastLevel = 5;

bool IsAntipodalPair(Word d, int n) {
  if (bits::Popcount(d) != 2) return false;
  const Mask low = static_cast<Mask>(std::countr_zero(d));
  const Mask high = static_cast<Mask>(63 - std::countl_zero(d));
  return (low ^ high) == FullMask(n);
}

bool MinorsListed(Word d, int n, int last_bit, const LevelCache& prev) {
  for (int bit = 0; bit < last_bit; ++bit) {
    const Word del = bits::Delete(d, bit);
    if (del != 0 && !prev.contains(del)) return false;
    const Word con = bits::Contract(d, bit);
    if (con != 0 && !prev.contains(con)) return false;
  }
  return !IsAntipodalPair(d, n);
}

bool ComposedIsDeltaMatroid(Word d, int n, const LevelCache& prev) {
  if (n >= kFirstFastLevel) return ComposedCandidateIsDeltaMatroid(d, n, prev);
  return IsDeltaMatroid(SetSystem::FromWord(n, d));
}

// Runs `body(i)` for i in [0, count) over `threads` workers, strided.
template <typename Body>
void ParallelFor(std::size_t count, int threads, Body&& body) {
  threads = std::max(1, threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) body(0, i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) body(t, i);
    });
  }
  for (auto& w : workers) w.join();
}

std::vector<std::vector<Mask>> PermutationTables(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<Mask>> tables;
  do {
    std::vector<Mask> table(std::size_t{1} << n);
    for (Mask m = 0; m < table.size(); ++m) {
      Mask image = 0;
      for (int i = 0; i < n; ++i) {
        if ((m >> i) & 1u) image |= Mask{1} << perm[i];
      }
      table[m] = image;
    }
    tables.push_back(std::move(table));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return tables;
}

Word Image(Word system, Mask twist, const std::vector<Mask>& relabel) {
  Word out = 0;
  for (Word rest = system; rest != 0; rest &= rest - 1) {
    const Mask m = static_cast<Mask>(std::countr_zero(rest));
    out |= Word{1} << relabel[m ^ twist];
  }
  return out;
}

std::vector<Word> Orbit(Word system, int n,
                        const std::vector<std::vector<Mask>>& tables) {
  std::vector<Word> orbit;
  orbit.reserve(tables.size() << n);
  for (const auto& table : tables) {
    for (Mask twist = 0; twist <= FullMask(n); ++twist) {
      orbit.push_back(Image(system, twist, table));
    }
  }
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

void CheckEnumerable(const LevelCache& prev) {
  if (prev.n() + 1 > kMaxEnumeratedLevel) {
    throw Error(ErrorCode::kResourceLimit,
                "level " + std::to_string(prev.n() + 1) +
                    " cannot be listed; use the class-based count");
  }
}

}  // namespace

LevelCache::LevelCache(int n, std::vector<Word> systems)
    : n_(n), systems_(std::move(systems)) {
  if (n < 0 || n > kMaxLevel) {
    throw Error(ErrorCode::kIncompleteCache,
                "level " + std::to_string(n) + " outside [0, 6]");
  }
  const Word universe = bits::UniverseMask(n);
  for (std::size_t i = 0; i < systems_.size(); ++i) {
    if ((systems_[i] & ~universe) != 0 || systems_[i] == 0) {
      throw Error(ErrorCode::kIncompleteCache,
                  "level entry " + std::to_string(i) + " is not a proper system");
    }
    if (i > 0 && systems_[i - 1] >= systems_[i]) {
      throw Error(ErrorCode::kIncompleteCache,
                  "level entries are not strictly increasing at " +
                      std::to_string(i));
    }
  }
  if (n <= 4) {
    dense_.assign(std::max<std::size_t>(1, (std::size_t{1} << (1u << n)) / 64), 0);
    for (Word w : systems_) dense_[w >> 6] |= std::uint64_t{1} << (w & 63);
  }
}

LevelCache LevelCache::Base() { return LevelCache(0, {Word{1}}); }

std::size_t LevelCache::IndexOf(Word system) const noexcept {
  const auto it = std::lower_bound(systems_.begin(), systems_.end(), system);
  if (it == systems_.end() || *it != system) return systems_.size();
  return static_cast<std::size_t>(it - systems_.begin());
}

void ValidateLevel(const LevelCache& level) {
  const int n = level.n();
  if (!level.contains(bits::UniverseMask(n))) {
    throw Error(ErrorCode::kIncompleteCache,
                "level " + std::to_string(n) + " is missing the power set");
  }
  for (Word w : level.systems()) {
    for (int bit = 0; bit < n; ++bit) {
      if (!level.contains(bits::Twist(w, Mask{1} << bit))) {
        throw Error(ErrorCode::kIncompleteCache,
                    "level " + std::to_string(n) +
                        " is not closed under twisting");
      }
    }
    if (n <= 4 && !IsDeltaMatroid(SetSystem::FromWord(n, w))) {
      throw Error(ErrorCode::kIncompleteCache,
                  "level " + std::to_string(n) + " lists a non-delta-matroid");
    }
  }
}

LevelCache EnumerateLevel(const LevelCache& prev,
                          const EnumerateOptions& options) {
  CheckEnumerable(prev);
  ValidateLevel(prev);
  const int n = prev.n() + 1;
  std::vector<Word> parents;
  parents.reserve(prev.size() + 1);
  parents.push_back(0);
  parents.insert(parents.end(), prev.systems().begin(), prev.systems().end());

  const int threads = std::max(1, options.threads);
  std::vector<std::vector<Word>> found(threads);
  ParallelFor(parents.size(), threads, [&](int worker, std::size_t i) {
    const Word contracted = parents[i];
    auto& out = found[worker];
    for (Word deleted : parents) {
      if ((contracted | deleted) == 0) continue;
      const Word d = bits::Compose(contracted, deleted, n);
      if (ComposedIsDeltaMatroid(d, n, prev)) out.push_back(d);
    }
  });

  std::vector<Word> merged;
  std::size_t total = 0;
  for (const auto& f : found) total += f.size();
  merged.reserve(total);
  for (auto& f : found) {
    merged.insert(merged.end(), f.begin(), f.end());
    std::vector<Word>().swap(f);
  }
  std::sort(merged.begin(), merged.end());
  return LevelCache(n, std::move(merged));
}

bool ComposedCandidateIsDeltaMatroid(Word d, int n, const LevelCache& prev) {
  return MinorsListed(d, n, n - 1, prev);
}

bool BcnFastCheck(const SetSystem& d, const LevelCache& prev) {
  if (d.n() < kFirstFastLevel) {
    throw Error(ErrorCode::kPrecondition,
                "the antipodal shortcut needs n >= 5, got " +
                    std::to_string(d.n()));
  }
  if (prev.n() != d.n() - 1) {
    throw Error(ErrorCode::kSizeMismatch, "cache level does not match n - 1");
  }
  if (!d.proper()) {
    throw Error(ErrorCode::kImproperInput, "candidate must be proper");
  }
  return MinorsListed(d.word(), d.n(), d.n(), prev);
}

std::vector<SetSystem> AntipodalSystems(int n) {
  if (n < 1 || n > kMaxGroundSize) {
    throw Error(ErrorCode::kPrecondition, "antipodal systems need n >= 1");
  }
  std::vector<SetSystem> out;
  const Mask full = FullMask(n);
  for (Mask f = 0; f <= full; ++f) {
    if (f < (full ^ f)) out.push_back(SetSystem::FromMasks(n, {f, full ^ f}));
  }
  return out;
}

double Gamma(int n, std::uint64_t d_n) {
  return std::log2(std::log2(static_cast<double>(d_n) + 1.0)) - (n - 1);
}

EvenCount CountEven(const LevelCache& level) {
  EvenCount count;
  Word even_masks = 0;
  for (Mask m = 0; m < (Mask{1} << level.n()); ++m) {
    if (Cardinality(m) % 2 == 0) even_masks |= Word{1} << m;
  }
  const Word odd_masks = bits::UniverseMask(level.n()) & ~even_masks;
  for (Word w : level.systems()) {
    if ((w & odd_masks) == 0) {
      ++count.total;
      ++count.all_even;
    } else if ((w & even_masks) == 0) {
      ++count.total;
    }
  }
  return count;
}

Word CanonicalForm(Word system, int n) {
  const auto tables = PermutationTables(n);
  return Orbit(system, n, tables).front();
}

std::vector<TwistClass> TwistClasses(const LevelCache& level) {
  const int n = level.n();
  const auto tables = PermutationTables(n);
  std::vector<bool> seen(level.size(), false);
  std::vector<TwistClass> classes;
  for (std::size_t i = 0; i < level.size(); ++i) {
    if (seen[i]) continue;
    const std::vector<Word> orbit = Orbit(level.systems()[i], n, tables);
    for (Word w : orbit) {
      const std::size_t j = level.IndexOf(w);
      if (j == level.size()) {
        throw Error(ErrorCode::kIncompleteCache,
                    "level is not closed under twists and relabelling");
      }
      seen[j] = true;
    }
    classes.push_back({orbit.front(), orbit.size()});
  }
  return classes;
}

std::uint64_t CountCompatible(Word contracted, const LevelCache& prev) {
  const int n = prev.n() + 1;
  if (n > bits::kMaxWordGround) {
    throw Error(ErrorCode::kResourceLimit, "compatibility beyond n = 6");
  }
  std::uint64_t count = 0;
  if (contracted != 0) {
    const Word d = bits::Compose(contracted, 0, n);
    if (ComposedIsDeltaMatroid(d, n, prev)) ++count;
  }
  for (Word deleted : prev.systems()) {
    const Word d = bits::Compose(contracted, deleted, n);
    if (ComposedIsDeltaMatroid(d, n, prev)) ++count;
  }
  return count;
}

std::uint64_t CountLevelByClasses(const LevelCache& prev,
                                  const EnumerateOptions& options) {
  ValidateLevel(prev);
  std::vector<TwistClass> classes = TwistClasses(prev);
  classes.push_back({0, 1});  // the improper system is a class of its own
  const int threads = std::max(1, options.threads);
  std::vector<std::uint64_t> partial(threads, 0);
  ParallelFor(classes.size(), threads, [&](int worker, std::size_t i) {
    partial[worker] +=
        classes[i].size * CountCompatible(classes[i].representative, prev);
  });
  return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

}  // namespace dm
