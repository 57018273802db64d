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

#include "dm/matroid.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <utility>

#include "dm/error.hpp"

namespace dm {
namespace {

// Smallest cardinality among feasible sets, or -1 if not equicardinal.
int CommonCardinality(const SetSystem& s) {
  int rank = -1;
  bool equal = true;
  s.ForEachFeasible([&](Mask m) {
    if (rank < 0) rank = Cardinality(m);
    if (Cardinality(m) != rank) equal = false;
  });
  return equal ? rank : -1;
}

}  // namespace

bool IsMatroid(const SetSystem& bases) {
  if (!bases.proper()) {
    throw Error(ErrorCode::kImproperInput, "a basis family must be non-empty");
  }
  return CommonCardinality(bases) >= 0 && !CheckSymmetricExchange(bases);
}

Matroid::Matroid(SetSystem bases) : bases_(std::move(bases)), rank_(0) {
  if (!bases_.proper()) {
    throw Error(ErrorCode::kImproperInput, "a matroid needs at least one basis");
  }
  rank_ = CommonCardinality(bases_);
  if (rank_ < 0 || CheckSymmetricExchange(bases_)) {
    throw Error(ErrorCode::kNotDeltaMatroid,
                "bases " + bases_.ToString() + " violate basis exchange");
  }
}

Mask Matroid::Loops() const {
  Mask covered = 0;
  bases_.ForEachFeasible([&](Mask m) { covered |= m; });
  return FullMask(bases_.n()) & ~covered;
}

Matroid Matroid::Dual() const {
  return Matroid(dm::Dual(bases_), bases_.n() - rank_, Unchecked{});
}

Matroid MinFeasibleMatroid(const SetSystem& s, bool verify) {
  if (!s.proper()) {
    throw Error(ErrorCode::kImproperInput,
                "minimum feasible sets of an improper system");
  }
  if (verify && CheckSymmetricExchange(s)) {
    throw Error(ErrorCode::kNotDeltaMatroid,
                s.ToString() + " is not a delta-matroid");
  }
  int least = INT_MAX;
  s.ForEachFeasible([&](Mask m) { least = std::min(least, Cardinality(m)); });
  std::vector<Mask> minimum;
  s.ForEachFeasible([&](Mask m) {
    if (Cardinality(m) == least) minimum.push_back(m);
  });
  SetSystem bases = SetSystem::FromMasks(s.n(), minimum);
  if (verify) return Matroid(std::move(bases));
  return Matroid(std::move(bases), least, Matroid::Unchecked{});
}

}  // namespace dm
