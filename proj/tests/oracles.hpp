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

// Brute-force reference implementations used as test oracles. They follow
// the definitions directly and share no code with the library kernels.

#ifndef DM_TESTS_ORACLES_HPP_
#define DM_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Mask = std::uint32_t;
using Family = std::vector<Mask>;

inline int Popcount(Mask m) {
  int c = 0;
  for (; m != 0; m >>= 1) c += static_cast<int>(m & 1u);
  return c;
}

inline std::uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Feasible masks of an n <= 6 system given as a 64-bit word.
inline Family FromWord(int n, std::uint64_t word) {
  Family f;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if ((word >> m) & 1u) f.push_back(m);
  }
  return f;
}

inline bool Has(const Family& f, Mask m) {
  return std::find(f.begin(), f.end(), m) != f.end();
}

// For all X, Y in F and e in X △ Y there is f in X △ Y (possibly e) with
// X △ {e, f} in F. Improper families are not delta-matroids.
inline bool IsDeltaMatroid(int n, const Family& f) {
  if (f.empty()) return false;
  std::vector<char> in(std::size_t{1} << n, 0);
  for (Mask m : f) in[m] = 1;
  for (Mask x : f) {
    for (Mask y : f) {
      const Mask diff = x ^ y;
      for (int e = 0; e < n; ++e) {
        if (!((diff >> e) & 1u)) continue;
        bool repaired = false;
        for (int g = 0; g < n && !repaired; ++g) {
          if (!((diff >> g) & 1u)) continue;
          const Mask moved = x ^ (Mask{1} << e) ^ (g == e ? 0 : Mask{1} << g);
          repaired = in[moved] != 0;
        }
        if (!repaired) return false;
      }
    }
  }
  return true;
}

// Drops bit `bit` and shifts the higher bits down.
inline Mask Squeeze(Mask m, int bit) {
  const Mask low = m & ((Mask{1} << bit) - 1);
  return low | ((m >> (bit + 1)) << bit);
}

inline Family Delete(const Family& f, int bit) {
  Family out;
  for (Mask m : f) {
    if (!((m >> bit) & 1u)) out.push_back(Squeeze(m, bit));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Family Contract(const Family& f, int bit) {
  Family out;
  for (Mask m : f) {
    if ((m >> bit) & 1u) out.push_back(Squeeze(m, bit));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Every delta-matroid on [n] as a feasibility word, ascending; n <= 4.
inline std::vector<std::uint64_t> BruteForceLevel(int n) {
  std::vector<std::uint64_t> out;
  const std::uint64_t count = std::uint64_t{1} << (1u << n);
  for (std::uint64_t w = 1; w < count; ++w) {
    if (IsDeltaMatroid(n, FromWord(n, w))) out.push_back(w);
  }
  return out;
}

// Equicardinal and the basis exchange axiom holds.
inline bool IsMatroid(int n, const Family& b) {
  if (b.empty()) return false;
  for (Mask m : b) {
    if (Popcount(m) != Popcount(b.front())) return false;
  }
  for (Mask x : b) {
    for (Mask y : b) {
      for (int e = 0; e < n; ++e) {
        if (!((x >> e) & 1u) || ((y >> e) & 1u)) continue;
        bool found = false;
        for (int g = 0; g < n && !found; ++g) {
          if (((y >> g) & 1u) && !((x >> g) & 1u)) {
            found = Has(b, (x & ~(Mask{1} << e)) | (Mask{1} << g));
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

inline bool Adjacent(Mask a, Mask b) { return Popcount(a ^ b) == 1; }

// Largest number of Q_n neighbours a member has inside `v`.
inline int QnDegree(const Family& v) {
  int best = 0;
  for (Mask a : v) {
    int d = 0;
    for (Mask b : v) d += Adjacent(a, b) ? 1 : 0;
    best = std::max(best, d);
  }
  return best;
}

// Every stable vertex set of Q_n, by scanning all 2^(2^n) subsets; n <= 3.
inline std::vector<Family> AllStableSets(int n) {
  std::vector<Family> out;
  const std::uint64_t count = std::uint64_t{1} << (1u << n);
  for (std::uint64_t w = 0; w < count; ++w) {
    Family v = FromWord(n, w);
    if (QnDegree(v) == 0) out.push_back(v);
  }
  return out;
}

// Dense adjacency of R_n restricted to sets of the given size parity.
inline std::vector<std::vector<int>> RnComponentMatrix(int n, int parity) {
  Family vertices;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (Popcount(m) % 2 == parity) vertices.push_back(m);
  }
  std::vector<std::vector<int>> a(vertices.size(), std::vector<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      a[i][j] = Popcount(vertices[i] ^ vertices[j]) == 2 ? 1 : 0;
    }
  }
  return a;
}

// Random family on [n] with each mask kept with probability `p`.
inline Family RandomFamily(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution keep(p);
  Family f;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (keep(rng)) f.push_back(m);
  }
  return f;
}

}  // namespace oracle

#endif  // DM_TESTS_ORACLES_HPP_
