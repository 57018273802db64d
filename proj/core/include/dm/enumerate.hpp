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

// Level-by-level enumeration of labelled delta-matroids.
//
// Level n is produced from level n-1 by running over ordered pairs (D1, D2)
// drawn from the previous level plus the improper system, composing the
// unique D on [n] with D // n = D1 and D \\ n = D2, and keeping D when it is a
// delta-matroid. Up to n = 4 the full axiom decides; from n = 5 on, D is a
// delta-matroid iff all its single-element minors are improper or listed in
// the previous level and D is not an antipodal pair {F, [n] - F}.

#ifndef DM_ENUMERATE_HPP_
#define DM_ENUMERATE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dm/bits.hpp"
#include "dm/set_system.hpp"

namespace dm {

// Every labelled delta-matroid on [n], as sorted single-word bitvectors.
class LevelCache {
 public:
  static constexpr int kMaxLevel = bits::kMaxWordGround;

  // `systems` must be strictly increasing and within 2^n bits; otherwise
  // throws kIncompleteCache.
  LevelCache(int n, std::vector<bits::Word> systems);

  // The single delta-matroid ({}, {{}}).
  static LevelCache Base();

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return systems_.size(); }
  std::span<const bits::Word> systems() const noexcept { return systems_; }
  SetSystem system(std::size_t i) const {
    return SetSystem::FromWord(n_, systems_[i]);
  }

  bool contains(bits::Word system) const noexcept {
    if (!dense_.empty()) return ((dense_[system >> 6] >> (system & 63)) & 1u) != 0;
    return std::binary_search(systems_.begin(), systems_.end(), system);
  }
  bool contains(const SetSystem& s) const {
    return s.n() == n_ && contains(s.word());
  }
  // Position of `system`, or size() when absent.
  std::size_t IndexOf(bits::Word system) const noexcept;

  friend bool operator==(const LevelCache& a, const LevelCache& b) {
    return a.n_ == b.n_ && a.systems_ == b.systems_;
  }

 private:
  int n_;
  std::vector<bits::Word> systems_;
  // Membership bitmap over all 2^(2^n) systems, kept when n <= 4.
  std::vector<std::uint64_t> dense_;
};

// Throws kIncompleteCache unless the level contains the power set, is closed
// under single-element twists and (for n <= 4) every entry passes the axiom.
void ValidateLevel(const LevelCache& level);

struct EnumerateOptions {
  int threads = 1;
};

// Level prev.n() + 1. Supported up to level 5; larger levels do not fit in
// memory as lists and throw kResourceLimit.
LevelCache EnumerateLevel(const LevelCache& prev,
                          const EnumerateOptions& options = {});

// Composed-candidate test for n >= 5: every single-element minor is improper
// or in `prev`, and `d` is not an antipodal pair. `d` must be proper.
bool BcnFastCheck(const SetSystem& d, const LevelCache& prev);

// Word form of BcnFastCheck; skips minors by the last element, which the
// enumeration already draws from `prev`.
bool ComposedCandidateIsDeltaMatroid(bits::Word d, int n, const LevelCache& prev);

// All systems {F, [n] - F}; there are 2^(n-1) of them.
std::vector<SetSystem> AntipodalSystems(int n);

// log2 log2 (d_n + 1) - (n - 1).
double Gamma(int n, std::uint64_t d_n);

struct EvenCount {
  std::uint64_t total = 0;     // e_n
  std::uint64_t all_even = 0;  // feasible sizes all even
};

EvenCount CountEven(const LevelCache& level);

// Minimum bitvector over all images of `system` under a twist followed by a
// relabelling of [n].
bits::Word CanonicalForm(bits::Word system, int n);

struct TwistClass {
  bits::Word representative = 0;  // canonical form
  std::uint64_t size = 0;
};

// Partition of a level into classes of "isomorphic to a twist of".
std::vector<TwistClass> TwistClasses(const LevelCache& level);

// Number of D2 in prev plus the improper system such that composing
// (contracted, D2) gives a delta-matroid on [prev.n() + 1].
std::uint64_t CountCompatible(bits::Word contracted, const LevelCache& prev);

// d_{prev.n() + 1} from one compatibility count per twist class.
std::uint64_t CountLevelByClasses(const LevelCache& prev,
                                  const EnumerateOptions& options = {});

}  // namespace dm

#endif  // DM_ENUMERATE_HPP_
