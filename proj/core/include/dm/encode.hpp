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

// Container encoding of even delta-matroids.
//
// For a delta-matroid D whose feasible sets all have even size, let L be the
// infeasible even sets, viewed as vertices of the even component of R_n (the
// distance-2 graph of the hypercube). The Kleitman-Winston procedure finds
// S ⊆ L and A, with A a function of S alone, such that L ⊆ S ∪ N(S) ∪ A. A
// local cover at each X in S (a partition of [n] ∪ {z} encoding a rank-2
// matroid) says which neighbours X △ {a, b} are infeasible, and L ∩ A is
// listed explicitly. Together these determine L and hence D.

#ifndef DM_ENCODE_HPP_
#define DM_ENCODE_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dm/set_system.hpp"

namespace dm {

// Non-negative exact fraction in lowest terms.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction() = default;
  Fraction(std::int64_t numerator, std::int64_t denominator);

  double value() const noexcept { return static_cast<double>(num) / den; }
  std::string ToString() const;  // "p/q"
  static Fraction Parse(const std::string& text);

  friend bool operator==(const Fraction&, const Fraction&) = default;
};

// A d-regular graph on a totally ordered vertex set. Vertices carry mask
// labels in strictly increasing order; index order is the tie-break order.
class RegularGraph {
 public:
  RegularGraph(std::vector<Mask> labels, std::vector<std::vector<int>> adjacency);

  int vertex_count() const noexcept { return static_cast<int>(labels_.size()); }
  int degree() const noexcept { return degree_; }
  Mask label(int v) const { return labels_[v]; }
  const std::vector<Mask>& labels() const noexcept { return labels_; }
  // -1 when `m` is not a vertex.
  int IndexOf(Mask m) const;
  std::span<const int> neighbours(int v) const {
    return {adjacency_.data() + static_cast<std::size_t>(v) * degree_,
            static_cast<std::size_t>(degree_)};
  }

 private:
  std::vector<Mask> labels_;
  int degree_ = 0;
  std::vector<int> adjacency_;  // vertex_count * degree, row-major
};

enum class Parity { kEven, kOdd };

// Component of R_n on the subsets of the given cardinality parity; edges join
// sets at symmetric-difference distance 2. Requires n >= 2.
RegularGraph RnComponent(int n, Parity parity);

// Checks A(R_n) = (A(Q_n)^2 - n I) / 2 exactly for 2 <= n <= 8; other n
// throw kSizeLimit.
bool RnMatrixIdentity(int n);

struct SpectrumEntry {
  std::int64_t value = 0;
  std::uint64_t multiplicity = 0;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

// (λ² - n) / 2 for λ = -n, -n + 2, ..., n, in that order.
std::vector<std::int64_t> RnSpectrumValues(int n);

// Eigenvalues of A(R_n) with multiplicities, ascending.
std::vector<SpectrumEntry> RnSpectrum(int n);

// Eigenvalues of one component of R_n (the two are isomorphic), ascending.
std::vector<SpectrumEntry> RnComponentSpectrum(int n);

std::int64_t SmallestEigenvalue(int n);

struct KwStep {
  Mask vertex = 0;
  bool took_l_branch = false;
};

struct KwResult {
  std::vector<Mask> s;  // selection order
  std::vector<Mask> a;  // ascending
  std::vector<KwStep> trace;
};

// Repeatedly picks the vertex of maximum degree in G[A] (least index on
// ties) until |A| <= alpha * N. A pick outside L only leaves A; a pick in L
// joins S and takes its G[A]-neighbours out of A with it.
KwResult KwEncode(const RegularGraph& g, std::span<const Mask> l, Fraction alpha);

// Replays KwEncode knowing only S. Throws kInconsistentS when S could not
// have been produced by any run.
std::vector<Mask> KwReconstructA(const RegularGraph& g, std::span<const Mask> s,
                                 Fraction alpha);

// λ / (d + λ), where -λ is the smallest eigenvalue.
Fraction ContainerAlpha(int degree, std::int64_t lambda);

// ceil(ln(d + 1) / (d + λ) * N).
std::size_t ContainerSizeBound(std::size_t vertex_count, int degree,
                               std::int64_t lambda);

// Partition of [n] ∪ {z}; element 0 stands for z. Blocks are kept sorted,
// each block ascending, the block holding z first.
class Partition {
 public:
  Partition(int n, std::vector<std::vector<int>> blocks);
  static Partition SingleBlock(int n);

  int n() const noexcept { return n_; }
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  // Index into blocks(); z is always in block 0.
  int BlockOf(int element) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  int n_;
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

// Local cover at an infeasible even X of an all-even delta-matroid.
Partition LocalCover(const SetSystem& d, Mask x);

enum class Certificate { kInfeasible, kFeasible };

// What the cover says about X △ {a, b}.
Certificate CoverCertifies(const Partition& p, Element a, Element b);

struct EncodingRecord {
  int n = 0;
  // kOdd when the input had odd feasible sets and was twisted by {1} first.
  Parity parity = Parity::kEven;
  std::vector<Mask> s;
  std::vector<Partition> covers;  // one per member of s
  std::vector<Mask> residual;     // L ∩ A, ascending
  Fraction alpha;
  // (1 + ceil(σ 2^(n-1))) / 2^(n-1) with σ = ln(d + 1) / (d + λ).
  Fraction sigma_prime;

  friend bool operator==(const EncodingRecord&, const EncodingRecord&) = default;
};

// Even sets of [n] that are infeasible in D, or in D * {1} when D's feasible
// sets are odd.
std::vector<Mask> InfeasibleEvenSets(const SetSystem& d);

EncodingRecord EncodeEvenDeltaMatroid(const SetSystem& d);

// The infeasible even sets recorded by `record`.
std::vector<Mask> DecodeEvenDeltaMatroid(const EncodingRecord& record, int n);

// The delta-matroid itself, twisted back when the record says so.
SetSystem ReconstructEvenDeltaMatroid(const EncodingRecord& record);

struct BoundReport {
  int n = 0;
  Fraction alpha;
  double sigma = 0.0;
  Fraction sigma_prime;
  mpz_class bell;  // B(n + 1)
  bool bell_within_power = false;
  bool sigma_prime_in_range = false;
  // Upper bound on log2 e_n.
  double log_e_n_bound = 0.0;
};

mpz_class BellNumber(int k);

// Requires n >= 3.
BoundReport BoundCalculator(int n);

// log2(count) <= bound with a 1e-9 margin.
bool BoundDominates(std::uint64_t count, double log2_bound);

}  // namespace dm

#endif  // DM_ENCODE_HPP_
