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

// Single-word kernels for set systems on at most six elements. A set system
// on [n] is packed into one 64-bit word whose bit m is the feasibility of the
// subset with indicator mask m. These are the hot loops of enumeration.

#ifndef DM_BITS_HPP_
#define DM_BITS_HPP_

#include <array>
#include <bit>
#include <cstdint>

namespace dm::bits {

using Word = std::uint64_t;

inline constexpr int kMaxWordGround = 6;

// kKeepLow[i] selects the positions p with bit i of p clear.
inline constexpr std::array<Word, 6> kKeepLow = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

constexpr Word UniverseMask(int n) {
  return n >= kMaxWordGround ? ~Word{0} : (Word{1} << (1u << n)) - 1;
}

// Packs the positions selected by kKeepLow[bit] into the low half.
constexpr Word CompressHalf(Word x, int bit) {
  x &= kKeepLow[bit];
  for (int s = bit; s < 5; ++s) {
    x = (x | (x >> (1u << s))) & kKeepLow[s + 1];
  }
  return x;
}

// Inverse of CompressHalf: spreads the low half back onto kKeepLow[bit].
constexpr Word ExpandHalf(Word x, int bit) {
  x &= kKeepLow[5];
  for (int s = 4; s >= bit; --s) {
    x = (x | (x << (1u << s))) & kKeepLow[s];
  }
  return x;
}

// Set-system deletion of the element stored at `bit`.
constexpr Word Delete(Word system, int bit) { return CompressHalf(system, bit); }

// Set-system contraction of the element stored at `bit`.
constexpr Word Contract(Word system, int bit) {
  return CompressHalf(system >> (1u << bit), bit);
}

// System on [n] whose contraction by n is `contracted` and whose deletion by
// n is `deleted`, both on [n-1].
constexpr Word Compose(Word contracted, Word deleted, int n) {
  const unsigned half = 1u << (n - 1);
  return deleted | (half == 64 ? 0 : contracted << half);
}

// Twist by `twist_mask`: bit m moves to bit m ^ twist_mask.
constexpr Word Twist(Word system, unsigned twist_mask) {
  for (int bit = 0; bit < kMaxWordGround; ++bit) {
    if ((twist_mask >> bit) & 1u) {
      const unsigned shift = 1u << bit;
      const Word low = system & kKeepLow[bit];
      const Word high = (system >> shift) & kKeepLow[bit];
      system = (low << shift) | high;
    }
  }
  return system;
}

constexpr int Popcount(Word w) { return std::popcount(w); }

}  // namespace dm::bits

#endif  // DM_BITS_HPP_
