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

#include "dm/construct.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "dm/error.hpp"

namespace dm {
namespace {

bool CoinFlip(std::mt19937_64& rng) { return (rng() >> 63) != 0; }

// Uniform in [0, bound) by rejection, independent of the standard library's
// distribution implementations.
std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::vector<bool> MembershipOf(const VertexSet& v) {
  std::vector<bool> in(std::size_t{1} << v.n(), false);
  for (Mask m : v.members()) in[m] = true;
  return in;
}

std::vector<Mask> SubsetsOfSize(int n, int r) {
  std::vector<Mask> out;
  for (Mask m = 0; m <= FullMask(n); ++m) {
    if (Cardinality(m) == r) out.push_back(m);
    if (m == FullMask(n)) break;
  }
  return out;
}

int ElementSum(Mask m) {
  int sum = 0;
  for (Mask rest = m; rest != 0; rest &= rest - 1) sum += std::countr_zero(rest) + 1;
  return sum;
}

void RequireGround(int n) {
  if (n < 0 || n > kMaxGroundSize) {
    throw Error(ErrorCode::kSizeLimit,
                "ground-set size " + std::to_string(n) + " unsupported");
  }
}

}  // namespace

VertexSet::VertexSet(int n, std::vector<Mask> members)
    : n_(n), members_(std::move(members)) {
  RequireGround(n);
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() > FullMask(n)) {
    throw Error(ErrorCode::kMaskOutOfRange,
                "vertex " + std::to_string(members_.back()) +
                    " out of range for n=" + std::to_string(n));
  }
}

bool VertexSet::contains(Mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

int QnDegree(const VertexSet& v) {
  const std::vector<bool> in = MembershipOf(v);
  int best = 0;
  for (Mask m : v.members()) {
    int degree = 0;
    for (int i = 0; i < v.n(); ++i) {
      if (in[m ^ (Mask{1} << i)]) ++degree;
    }
    best = std::max(best, degree);
  }
  return best;
}

VertexSet RandomStableSet(int n, std::mt19937_64& rng) {
  RequireGround(n);
  std::vector<Mask> order(std::size_t{1} << n);
  for (Mask m = 0; m < order.size(); ++m) order[m] = m;
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[UniformBelow(rng, i)]);
  }
  std::vector<bool> blocked(order.size(), false);
  std::vector<Mask> chosen;
  for (Mask m : order) {
    if (blocked[m] || !CoinFlip(rng)) continue;
    chosen.push_back(m);
    for (int i = 0; i < n; ++i) blocked[m ^ (Mask{1} << i)] = true;
  }
  return VertexSet(n, std::move(chosen));
}

SetSystem DeltaMatroidFromComplement(const VertexSet& v, ComplementMode mode) {
  const int degree = QnDegree(v);
  if (mode == ComplementMode::kStable && degree > 0) {
    throw Error(ErrorCode::kDegreeViolation,
                "vertex set is not stable in Q_" + std::to_string(v.n()));
  }
  if (mode == ComplementMode::kDegreeOne) {
    if (v.n() < 2) {
      throw Error(ErrorCode::kPrecondition,
                  "the degree-one construction needs n >= 2");
    }
    if (degree > 1) {
      throw Error(ErrorCode::kDegreeViolation,
                  "induced subgraph of Q_" + std::to_string(v.n()) +
                      " has a vertex of degree " + std::to_string(degree));
    }
  }
  if (v.size() == (std::size_t{1} << v.n())) {
    throw Error(ErrorCode::kImproperResult,
                "the complement of every vertex is empty");
  }
  const std::vector<bool> in = MembershipOf(v);
  std::vector<Mask> feasible;
  for (Mask m = 0; m < in.size(); ++m) {
    if (!in[m]) feasible.push_back(m);
  }
  return SetSystem::FromMasks(v.n(), feasible);
}

SetSystem EvenPlusOdd(int n, const VertexSet& even_sets) {
  if (even_sets.n() != n) {
    throw Error(ErrorCode::kSizeMismatch, "vertex set lives on another Q_n");
  }
  std::vector<Mask> feasible;
  for (Mask m : even_sets.members()) {
    if (Cardinality(m) % 2 != 0) {
      throw Error(ErrorCode::kParity,
                  "mask " + std::to_string(m) + " has odd cardinality");
    }
    feasible.push_back(m);
  }
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (Cardinality(m) % 2 != 0) feasible.push_back(m);
  }
  return SetSystem::FromMasks(n, feasible);
}

CutSample CutConstruction(int n, Element cut, VertexSet even_side,
                          VertexSet odd_side) {
  if (n < 2) {
    throw Error(ErrorCode::kPrecondition, "the cut construction needs n >= 2");
  }
  if (cut < 1 || cut > n) {
    throw Error(ErrorCode::kElementOutOfRange,
                "cut " + std::to_string(cut) + " not in [" + std::to_string(n) + "]");
  }
  const Mask cut_bit = ElementBit(cut);
  for (Mask m : even_side.members()) {
    if ((m & cut_bit) != 0 || Cardinality(m) % 2 != 0) {
      throw Error(ErrorCode::kParity,
                  "mask " + std::to_string(m) + " is not an even vertex of the cut-free half");
    }
  }
  for (Mask m : odd_side.members()) {
    if ((m & cut_bit) == 0 || Cardinality(m) % 2 != 1) {
      throw Error(ErrorCode::kParity,
                  "mask " + std::to_string(m) + " is not an odd vertex of the cut half");
    }
  }
  std::vector<Mask> removed = even_side.members();
  removed.insert(removed.end(), odd_side.members().begin(),
                 odd_side.members().end());
  SetSystem system = DeltaMatroidFromComplement(
      VertexSet(n, std::move(removed)), ComplementMode::kDegreeOne);
  return CutSample{std::move(even_side), std::move(odd_side), std::move(system)};
}

CutSample SampleCutConstruction(int n, Element cut, std::uint64_t seed) {
  if (n < 2 || n > kMaxGroundSize) {
    throw Error(ErrorCode::kPrecondition, "the cut construction needs 2 <= n <= 16");
  }
  if (cut < 1 || cut > n) {
    throw Error(ErrorCode::kElementOutOfRange,
                "cut " + std::to_string(cut) + " not in [" + std::to_string(n) + "]");
  }
  std::mt19937_64 rng(seed);
  const Mask cut_bit = ElementBit(cut);
  std::vector<Mask> even_side;
  std::vector<Mask> odd_side;
  for (Mask m = 0; m <= FullMask(n); ++m) {
    const bool parity_odd = Cardinality(m) % 2 != 0;
    const bool on_cut = (m & cut_bit) != 0;
    if (!on_cut && !parity_odd && CoinFlip(rng)) even_side.push_back(m);
    if (on_cut && parity_odd && CoinFlip(rng)) odd_side.push_back(m);
  }
  return CutConstruction(n, cut, VertexSet(n, std::move(even_side)),
                         VertexSet(n, std::move(odd_side)));
}

bool CutBound::Certifies(const mpq_class& epsilon) const {
  mpz_class full;
  mpz_ui_pow_ui(full.get_mpz_t(), 2, 1ul << (n - 1));
  const mpq_class target = (1 - epsilon) * mpq_class(n) * mpq_class(full);
  return exact >= target;
}

CutBound CutCountLowerBound(int n) {
  if (n < 2 || n > 24) {
    throw Error(ErrorCode::kPrecondition, "cut bound needs 2 <= n <= 24");
  }
  const unsigned long quarter = 1ul << (n - 2);
  mpz_class halves;
  mpz_ui_pow_ui(halves.get_mpz_t(), 2, 2 * quarter);
  mpz_class three_pow;
  mpz_class four_pow;
  mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, quarter);
  mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, quarter);
  mpq_class no_edge(three_pow, four_pow);
  no_edge.canonicalize();
  CutBound bound;
  bound.n = n;
  bound.exact = mpq_class(n) * mpq_class(halves) * (1 - no_edge);
  bound.exact.canonicalize();
  mpz_fdiv_q(bound.value.get_mpz_t(), bound.exact.get_num_mpz_t(),
             bound.exact.get_den_mpz_t());
  return bound;
}

VertexSet GrahamSloaneStableSet(int n, int r) {
  RequireGround(n);
  if (r <= 0 || r >= n) {
    throw Error(ErrorCode::kRankOutOfRange,
                "rank " + std::to_string(r) + " outside (0, " + std::to_string(n) + ")");
  }
  std::vector<std::vector<Mask>> classes(n);
  for (Mask m : SubsetsOfSize(n, r)) classes[ElementSum(m) % n].push_back(m);
  std::size_t best = 0;
  for (std::size_t c = 1; c < classes.size(); ++c) {
    if (classes[c].size() > classes[best].size()) best = c;
  }
  return VertexSet(n, std::move(classes[best]));
}

bool IsJohnsonStable(const VertexSet& v, int r) {
  const auto& members = v.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (Cardinality(members[i]) != r) return false;
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (Cardinality(members[i] & members[j]) == r - 1) return false;
    }
  }
  return true;
}

Matroid SparsePavingMatroid(const SparsePavingSpec& spec) {
  RequireGround(spec.n);
  if (spec.r < 0 || spec.r > spec.n) {
    throw Error(ErrorCode::kRankOutOfRange,
                "rank " + std::to_string(spec.r) + " outside [0, " +
                    std::to_string(spec.n) + "]");
  }
  if (spec.circuit_hyperplanes.n() != spec.n) {
    throw Error(ErrorCode::kSizeMismatch,
                "circuit-hyperplanes live on another ground set");
  }
  if (!IsJohnsonStable(spec.circuit_hyperplanes, spec.r)) {
    throw Error(ErrorCode::kStabilityViolation,
                "circuit-hyperplanes are not a stable set of r-sets in J(" +
                    std::to_string(spec.n) + "," + std::to_string(spec.r) + ")");
  }
  std::vector<Mask> bases;
  for (Mask m : SubsetsOfSize(spec.n, spec.r)) {
    if (!spec.circuit_hyperplanes.contains(m)) bases.push_back(m);
  }
  if (bases.empty()) {
    throw Error(ErrorCode::kEmptyBases, "every r-set is a circuit-hyperplane");
  }
  return Matroid(SetSystem::FromMasks(spec.n, bases));
}

SetSystem StackedEvenDeltaMatroid(int n,
                                  const std::map<int, SparsePavingSpec>& layers) {
  RequireGround(n);
  for (const auto& [rank, spec] : layers) {
    if (rank < 0 || rank > n || rank % 2 != 0) {
      throw Error(ErrorCode::kInvalidLayer,
                  "layer rank " + std::to_string(rank) + " is not an even rank <= n");
    }
  }
  std::vector<Mask> feasible;
  for (int rank = 0; rank <= n; rank += 2) {
    const auto it = layers.find(rank);
    if (it == layers.end()) {
      throw Error(ErrorCode::kMissingLayer,
                  "no layer for rank " + std::to_string(rank));
    }
    const SparsePavingSpec& spec = it->second;
    if (spec.n != n || spec.r != rank) {
      throw Error(ErrorCode::kInvalidLayer,
                  "layer for rank " + std::to_string(rank) + " describes rank " +
                      std::to_string(spec.r) + " on n=" + std::to_string(spec.n));
    }
    try {
      const Matroid layer = SparsePavingMatroid(spec);
      layer.bases().ForEachFeasible([&](Mask m) { feasible.push_back(m); });
    } catch (const Error& e) {
      throw Error(ErrorCode::kInvalidLayer, "rank " + std::to_string(rank) +
                                                " layer: " + e.what());
    }
  }
  return SetSystem::FromMasks(n, feasible);
}

std::map<int, SparsePavingSpec> RandomStackedLayers(int n, std::mt19937_64& rng) {
  RequireGround(n);
  std::map<int, SparsePavingSpec> layers;
  for (int rank = 0; rank <= n; rank += 2) {
    std::vector<Mask> chosen;
    if (rank > 0 && rank < n) {
      const VertexSet candidates = GrahamSloaneStableSet(n, rank);
      for (Mask m : candidates.members()) {
        if (CoinFlip(rng)) chosen.push_back(m);
      }
    }
    layers.emplace(rank, SparsePavingSpec{n, rank, VertexSet(n, std::move(chosen))});
  }
  return layers;
}

double EvenLowerBound(int n) {
  if (n < 1) throw Error(ErrorCode::kPrecondition, "n must be positive");
  return n - 1 - std::log2(static_cast<double>(n));
}

}  // namespace dm
