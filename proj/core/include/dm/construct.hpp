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

// Families of delta-matroids that come with a correctness argument:
// complements of sparse vertex sets of the hypercube Q_n, the per-cut random
// family, and even delta-matroids stacked from sparse paving matroids.

#ifndef DM_CONSTRUCT_HPP_
#define DM_CONSTRUCT_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "dm/matroid.hpp"
#include "dm/set_system.hpp"

namespace dm {

// Vertices of Q_n (or of J(n, r)) as subset masks, sorted and unique.
class VertexSet {
 public:
  explicit VertexSet(int n = 0) : n_(n) {}
  VertexSet(int n, std::vector<Mask> members);

  int n() const noexcept { return n_; }
  const std::vector<Mask>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(Mask m) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int n_;
  std::vector<Mask> members_;
};

// Maximum number of Q_n-neighbours (Hamming distance 1) a member has inside
// the set; 0 iff the set is stable.
int QnDegree(const VertexSet& v);

// Uniformly seeded random stable set of Q_n: vertices are visited in a
// shuffled order and each free vertex joins with probability 1/2.
VertexSet RandomStableSet(int n, std::mt19937_64& rng);

enum class ComplementMode { kStable, kDegreeOne };

// The system whose feasible sets are the vertices outside `v`.
SetSystem DeltaMatroidFromComplement(const VertexSet& v, ComplementMode mode);

// A together with every odd-cardinality subset of [n].
SetSystem EvenPlusOdd(int n, const VertexSet& even_sets);

struct CutSample {
  VertexSet even_side;  // cut element absent, even cardinality
  VertexSet odd_side;   // cut element present, odd cardinality
  SetSystem system;
};

// Complement of even_side ∪ odd_side for the given cut element.
CutSample CutConstruction(int n, Element cut, VertexSet even_side,
                          VertexSet odd_side);

// Each eligible vertex on either side is kept independently with
// probability 1/2, drawn from a mt19937_64 seeded with `seed`.
CutSample SampleCutConstruction(int n, Element cut, std::uint64_t seed);

struct CutBound {
  int n = 0;
  mpq_class exact;   // n * 2^(2^(n-2)) * 2^(2^(n-2)) * (1 - (3/4)^(2^(n-2)))
  mpz_class value;   // floor(exact)

  // exact >= (1 - epsilon) * n * 2^(2^(n-1)).
  bool Certifies(const mpq_class& epsilon) const;
};

CutBound CutCountLowerBound(int n);

// Largest class of r-subsets by element sum mod n (ties to the smaller
// residue); stable in J(n, r).
VertexSet GrahamSloaneStableSet(int n, int r);

// No two members intersect in exactly r - 1 elements.
bool IsJohnsonStable(const VertexSet& v, int r);

struct SparsePavingSpec {
  int n = 0;
  int r = 0;
  VertexSet circuit_hyperplanes;
};

// Bases are the r-sets that are not circuit-hyperplanes.
Matroid SparsePavingMatroid(const SparsePavingSpec& spec);

// Union of one sparse paving layer per even rank 0, 2, ..., 2*floor(n/2).
SetSystem StackedEvenDeltaMatroid(int n,
                                  const std::map<int, SparsePavingSpec>& layers);

// Random layers: for each even rank, a random subset of the Graham-Sloane
// class (each member kept with probability 1/2). Rank 0 and rank n layers
// have no circuit-hyperplanes.
std::map<int, SparsePavingSpec> RandomStackedLayers(int n, std::mt19937_64& rng);

// n - 1 - log2 n.
double EvenLowerBound(int n);

}  // namespace dm

#endif  // DM_CONSTRUCT_HPP_
