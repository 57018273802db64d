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

#include "dm/set_system.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>

#include "dm/error.hpp"

namespace dm {
namespace {

std::size_t WordCount(int n) {
  return n <= 6 ? 1 : (std::size_t{1} << n) / 64;
}

void CheckGroundSize(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw Error(ErrorCode::kSizeLimit,
                "ground-set size " + std::to_string(n) + " outside [0, " +
                    std::to_string(kMaxGroundSize) + "]");
  }
}

void CheckElement(const SetSystem& s, Element e) {
  if (e < 1 || e > s.n()) {
    throw Error(ErrorCode::kElementOutOfRange,
                "element " + std::to_string(e) + " not in [" +
                    std::to_string(s.n()) + "]");
  }
}

}  // namespace

SetSystem::SetSystem(int n) : n_(n) {
  CheckGroundSize(n);
  words_.assign(WordCount(n), 0);
}

SetSystem SetSystem::FromMasks(int n, std::span<const Mask> feasible) {
  SetSystem s(n);
  for (Mask m : feasible) {
    if (m >= s.universe_size()) {
      throw Error(ErrorCode::kMaskOutOfRange,
                  "mask " + std::to_string(m) + " out of range for n=" +
                      std::to_string(n));
    }
    s.words_[m >> 6] |= std::uint64_t{1} << (m & 63);
  }
  return s;
}

SetSystem SetSystem::FromWord(int n, bits::Word word) {
  if (n > bits::kMaxWordGround) {
    throw Error(ErrorCode::kSizeLimit, "FromWord requires n <= 6");
  }
  SetSystem s(n);
  if ((word & ~bits::UniverseMask(n)) != 0) {
    throw Error(ErrorCode::kMaskOutOfRange,
                "feasibility word has bits beyond 2^n");
  }
  s.words_[0] = word;
  return s;
}

SetSystem SetSystem::FromWords(int n, std::vector<std::uint64_t> words) {
  SetSystem s(n);
  if (words.size() != s.words_.size()) {
    throw Error(ErrorCode::kSizeMismatch, "word count does not match 2^n");
  }
  if (n < 6 && (words[0] & ~bits::UniverseMask(n)) != 0) {
    throw Error(ErrorCode::kMaskOutOfRange,
                "feasibility word has bits beyond 2^n");
  }
  s.words_ = std::move(words);
  return s;
}

SetSystem SetSystem::PowerSet(int n) {
  SetSystem s(n);
  if (n <= 6) {
    s.words_[0] = bits::UniverseMask(n);
  } else {
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  }
  return s;
}

bool SetSystem::proper() const noexcept {
  return std::any_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w != 0; });
}

std::size_t SetSystem::size() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

std::vector<Mask> SetSystem::masks() const {
  std::vector<Mask> out;
  out.reserve(size());
  ForEachFeasible([&](Mask m) { out.push_back(m); });
  return out;
}

bits::Word SetSystem::word() const {
  if (n_ > bits::kMaxWordGround) {
    throw Error(ErrorCode::kSizeLimit, "word() requires n <= 6");
  }
  return words_[0];
}

std::strong_ordering operator<=>(const SetSystem& a, const SetSystem& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string SetSystem::ToString() const {
  std::ostringstream out;
  out << "([" << n_ << "], {";
  bool first_set = true;
  ForEachFeasible([&](Mask m) {
    if (!first_set) out << ", ";
    first_set = false;
    out << '{';
    bool first_elem = true;
    for (int i = 0; i < n_; ++i) {
      if ((m >> i) & 1u) {
        if (!first_elem) out << ',';
        first_elem = false;
        out << (i + 1);
      }
    }
    out << '}';
  });
  out << "})";
  return out.str();
}

std::optional<ExchangeWitness> CheckSymmetricExchange(const SetSystem& s) {
  if (!s.proper()) {
    throw Error(ErrorCode::kImproperInput,
                "symmetric exchange is undefined on an improper set system");
  }
  const int n = s.n();
  const std::vector<Mask> feasible = s.masks();
  // repair[e] holds every f with X △ {e, f} feasible (f == e allowed).
  std::array<Mask, kMaxGroundSize> repair{};
  for (Mask x : feasible) {
    for (int e = 0; e < n; ++e) {
      Mask good = 0;
      const Mask xe = x ^ (Mask{1} << e);
      for (int f = 0; f < n; ++f) {
        const Mask candidate = f == e ? xe : xe ^ (Mask{1} << f);
        if (s.contains(candidate)) good |= Mask{1} << f;
      }
      repair[e] = good;
    }
    for (Mask y : feasible) {
      const Mask diff = x ^ y;
      for (Mask rest = diff; rest != 0; rest &= rest - 1) {
        const int e = std::countr_zero(rest);
        if ((repair[e] & diff) == 0) {
          return ExchangeWitness{x, y, e + 1};
        }
      }
    }
  }
  return std::nullopt;
}

bool IsDeltaMatroid(const SetSystem& s) {
  return s.proper() && !CheckSymmetricExchange(s).has_value();
}

bool IsEven(const SetSystem& s) {
  if (!s.proper()) {
    throw Error(ErrorCode::kImproperInput,
                "evenness is undefined on an improper set system");
  }
  int parity = -1;
  bool even = true;
  s.ForEachFeasible([&](Mask m) {
    const int p = Cardinality(m) & 1;
    if (parity < 0) parity = p;
    if (p != parity) even = false;
  });
  return even;
}

SetSystem Twist(const SetSystem& s, Mask a) {
  if (a > FullMask(s.n())) {
    throw Error(ErrorCode::kMaskOutOfRange,
                "twist mask " + std::to_string(a) + " has bits beyond n=" +
                    std::to_string(s.n()));
  }
  if (s.n() <= bits::kMaxWordGround) {
    return SetSystem::FromWord(s.n(), bits::Twist(s.word(), a));
  }
  std::vector<Mask> out;
  out.reserve(s.size());
  s.ForEachFeasible([&](Mask m) { out.push_back(m ^ a); });
  return SetSystem::FromMasks(s.n(), out);
}

SetSystem Minor(const SetSystem& s, Element e, MinorKind kind) {
  CheckElement(s, e);
  const int n = s.n();
  const int bit = e - 1;
  if (n <= bits::kMaxWordGround) {
    const bits::Word w = kind == MinorKind::kDelete ? bits::Delete(s.word(), bit)
                                                    : bits::Contract(s.word(), bit);
    return SetSystem::FromWord(n - 1, w);
  }
  const Mask low = (Mask{1} << bit) - 1;
  std::vector<Mask> out;
  s.ForEachFeasible([&](Mask m) {
    const bool has_e = ((m >> bit) & 1u) != 0;
    if (has_e == (kind == MinorKind::kContract)) {
      out.push_back((m & low) | ((m >> (bit + 1)) << bit));
    }
  });
  return SetSystem::FromMasks(n - 1, out);
}

SetSystem Compose(const SetSystem& contracted, const SetSystem& deleted) {
  if (contracted.n() != deleted.n()) {
    throw Error(ErrorCode::kSizeMismatch,
                "compose needs equal ground sets, got " +
                    std::to_string(contracted.n()) + " and " +
                    std::to_string(deleted.n()));
  }
  const int n = contracted.n() + 1;
  if (n > kMaxGroundSize) {
    throw Error(ErrorCode::kSizeLimit, "composed ground set exceeds 16");
  }
  if (n <= bits::kMaxWordGround) {
    return SetSystem::FromWord(
        n, bits::Compose(contracted.word(), deleted.word(), n));
  }
  std::vector<std::uint64_t> words;
  if (n == 7) {
    words = {deleted.word(), contracted.word()};
  } else {
    words.assign(deleted.words().begin(), deleted.words().end());
    words.insert(words.end(), contracted.words().begin(),
                 contracted.words().end());
  }
  return SetSystem::FromWords(n, std::move(words));
}

}  // namespace dm
