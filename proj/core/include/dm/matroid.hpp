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

#ifndef DM_MATROID_HPP_
#define DM_MATROID_HPP_

#include <utility>

#include "dm/set_system.hpp"

namespace dm {

// True iff the feasible sets of `bases` are equicardinal and satisfy the
// exchange axiom, i.e. they are the bases of a matroid.
bool IsMatroid(const SetSystem& bases);

// A matroid given by its bases.
class Matroid {
 public:
  // Throws kImproperInput or kNotDeltaMatroid if `bases` is not a basis family.
  explicit Matroid(SetSystem bases);

  const SetSystem& bases() const noexcept { return bases_; }
  int rank() const noexcept { return rank_; }
  int ground_size() const noexcept { return bases_.n(); }

  bool IsBasis(Mask m) const noexcept { return bases_.contains(m); }
  // Elements in no basis, as a mask.
  Mask Loops() const;
  Matroid Dual() const;

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  friend Matroid MinFeasibleMatroid(const SetSystem& s, bool verify);
  struct Unchecked {};
  Matroid(SetSystem bases, int rank, Unchecked)
      : bases_(std::move(bases)), rank_(rank) {}

  SetSystem bases_;
  int rank_;
};

// The minimum-cardinality feasible sets of a delta-matroid, as a matroid.
// With `verify` set the delta-matroid precondition is checked.
Matroid MinFeasibleMatroid(const SetSystem& s, bool verify = false);

}  // namespace dm

#endif  // DM_MATROID_HPP_
