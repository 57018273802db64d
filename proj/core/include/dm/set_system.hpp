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

#ifndef DM_SET_SYSTEM_HPP_
#define DM_SET_SYSTEM_HPP_

#include <bit>
#include <compare>
#include <initializer_list>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dm/bits.hpp"

namespace dm {

// Subset of [n] as an indicator mask: element i is bit i-1.
using Mask = std::uint32_t;

// Elements are 1-based throughout the public API.
using Element = int;

inline constexpr int kMaxGroundSize = 16;

constexpr Mask ElementBit(Element e) { return Mask{1} << (e - 1); }
constexpr Mask FullMask(int n) { return n == 0 ? 0 : (~Mask{0} >> (32 - n)); }
constexpr int Cardinality(Mask m) { return std::popcount(m); }

// A set system (E, F) with E = [n], stored as a feasibility bitvector of
// length 2^n. The all-zero vector is the improper system. Values are
// immutable once constructed.
class SetSystem {
 public:
  // The improper system on [n].
  explicit SetSystem(int n = 0);

  static SetSystem FromMasks(int n, std::span<const Mask> feasible);
  static SetSystem FromMasks(int n, std::initializer_list<Mask> feasible) {
    return FromMasks(n, std::span<const Mask>(feasible.begin(), feasible.size()));
  }
  // n <= 6 only: bit m of `word` is the feasibility of mask m.
  static SetSystem FromWord(int n, bits::Word word);
  static SetSystem FromWords(int n, std::vector<std::uint64_t> words);
  static SetSystem PowerSet(int n);

  int n() const noexcept { return n_; }
  std::size_t universe_size() const noexcept { return std::size_t{1} << n_; }

  bool contains(Mask m) const noexcept {
    return m < universe_size() && ((words_[m >> 6] >> (m & 63)) & 1u) != 0;
  }
  bool proper() const noexcept;
  std::size_t size() const noexcept;

  // Feasible masks in ascending order.
  std::vector<Mask> masks() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }
  // n <= 6 only.
  bits::Word word() const;

  template <typename Fn>
  void ForEachFeasible(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        fn(static_cast<Mask>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const SetSystem&, const SetSystem&) = default;
  // Orders by ground-set size, then by bitvector value read as an integer.
  friend std::strong_ordering operator<=>(const SetSystem& a,
                                          const SetSystem& b);

  std::string ToString() const;

 private:
  int n_;
  std::vector<std::uint64_t> words_;
};

// (X, Y, e) such that e is in X △ Y and no f in X △ Y makes
// X △ {e, f} feasible.
struct ExchangeWitness {
  Mask x = 0;
  Mask y = 0;
  Element e = 0;

  friend bool operator==(const ExchangeWitness&, const ExchangeWitness&) = default;
};

// Returns std::nullopt when the symmetric exchange axiom holds, otherwise the
// witness with the least X, then least Y, then least e. Throws
// ErrorCode::kImproperInput for improper systems.
std::optional<ExchangeWitness> CheckSymmetricExchange(const SetSystem& s);

// Proper and satisfies the axiom; never throws.
bool IsDeltaMatroid(const SetSystem& s);

// True iff every feasible set has the same cardinality parity.
bool IsEven(const SetSystem& s);

SetSystem Twist(const SetSystem& s, Mask a);
inline SetSystem Dual(const SetSystem& s) { return Twist(s, FullMask(s.n())); }

enum class MinorKind { kDelete, kContract };

// Set-system deletion (`\\`) or contraction (`//`). The remaining ground set
// is relabelled onto [n-1] preserving order. May return an improper system.
SetSystem Minor(const SetSystem& s, Element e, MinorKind kind);

// The unique system D on [n] with D // n == contracted and D \\ n == deleted.
SetSystem Compose(const SetSystem& contracted, const SetSystem& deleted);

}  // namespace dm

#endif  // DM_SET_SYSTEM_HPP_
