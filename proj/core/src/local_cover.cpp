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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "dm/encode.hpp"
#include "dm/error.hpp"

namespace dm {
namespace {

struct Orientation {
  SetSystem system;  // all feasible sets even
  Parity parity;
};

// Validates an even delta-matroid and twists it to the all-even side.
Orientation AllEvenOrientation(const SetSystem& d) {
  if (!d.proper()) {
    throw Error(ErrorCode::kImproperInput, "an improper system has no encoding");
  }
  if (!IsEven(d)) {
    throw Error(ErrorCode::kParity,
                "feasible sets of " + d.ToString() + " mix parities");
  }
  if (d.n() < 1) {
    throw Error(ErrorCode::kPrecondition, "encoding needs n >= 1");
  }
  bool odd = false;
  d.ForEachFeasible([&](Mask m) { odd = Cardinality(m) % 2 != 0; });
  if (!odd) return {d, Parity::kEven};
  return {Twist(d, ElementBit(1)), Parity::kOdd};
}

Mask Pair(Element a, Element b) { return ElementBit(a) | ElementBit(b); }

double ContainerSigma(std::int64_t degree, std::int64_t lambda) {
  return std::log(static_cast<double>(degree) + 1.0) /
         static_cast<double>(degree + lambda);
}

Fraction SigmaPrime(int n, double sigma) {
  const std::int64_t half = std::int64_t{1} << (n - 1);
  return Fraction(
      1 + static_cast<std::int64_t>(std::ceil(sigma * static_cast<double>(half))),
      half);
}

}  // namespace

Partition::Partition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n < 0 || n > kMaxGroundSize) {
    throw Error(ErrorCode::kInvalidPartition, "ground size out of range");
  }
  block_of_.assign(n + 1, -1);
  for (auto& block : blocks_) {
    if (block.empty()) {
      throw Error(ErrorCode::kInvalidPartition, "partition has an empty block");
    }
    std::sort(block.begin(), block.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (int element : blocks_[b]) {
      if (element < 0 || element > n) {
        throw Error(ErrorCode::kInvalidPartition,
                    "element " + std::to_string(element) + " outside [n] ∪ {z}");
      }
      if (block_of_[element] >= 0) {
        throw Error(ErrorCode::kInvalidPartition,
                    "element " + std::to_string(element) + " lies in two blocks");
      }
      block_of_[element] = static_cast<int>(b);
    }
  }
  for (int element = 0; element <= n; ++element) {
    if (block_of_[element] < 0) {
      throw Error(ErrorCode::kInvalidPartition,
                  "element " + std::to_string(element) + " is not covered");
    }
  }
}

Partition Partition::SingleBlock(int n) {
  std::vector<int> all(n + 1);
  for (int i = 0; i <= n; ++i) all[i] = i;
  return Partition(n, {std::move(all)});
}

int Partition::BlockOf(int element) const {
  if (element < 0 || element > n_) {
    throw Error(ErrorCode::kElementOutOfRange,
                "element " + std::to_string(element) + " outside [n] ∪ {z}");
  }
  return block_of_[element];
}

Partition LocalCover(const SetSystem& d, Mask x) {
  const Orientation oriented = AllEvenOrientation(d);
  if (oriented.parity != Parity::kEven) {
    throw Error(ErrorCode::kParity, "local covers need all feasible sets even");
  }
  const int n = d.n();
  if (x > FullMask(n)) {
    throw Error(ErrorCode::kMaskOutOfRange, "X is outside the ground set");
  }
  if (d.contains(x) || Cardinality(x) % 2 != 0) {
    throw Error(ErrorCode::kFeasibility,
                "local covers are defined at infeasible even sets only");
  }
  // Bases of the rank-2 matroid: pairs {a, b} with X △ {a, b} feasible.
  Mask covered = 0;
  bool any = false;
  for (Element a = 1; a <= n; ++a) {
    for (Element b = a + 1; b <= n; ++b) {
      if (d.contains(x ^ Pair(a, b))) {
        covered |= Pair(a, b);
        any = true;
      }
    }
  }
  if (!any) return Partition::SingleBlock(n);

  std::vector<std::vector<int>> blocks;
  std::vector<int> z_block = {0};
  std::vector<bool> placed(n + 1, false);
  for (Element a = 1; a <= n; ++a) {
    if ((covered & ElementBit(a)) == 0) {
      z_block.push_back(a);
      placed[a] = true;
    }
  }
  blocks.push_back(std::move(z_block));
  for (Element a = 1; a <= n; ++a) {
    if (placed[a]) continue;
    std::vector<int> parallel = {a};
    placed[a] = true;
    for (Element b = a + 1; b <= n; ++b) {
      if (!placed[b] && !d.contains(x ^ Pair(a, b))) {
        parallel.push_back(b);
        placed[b] = true;
      }
    }
    blocks.push_back(std::move(parallel));
  }
  return Partition(n, std::move(blocks));
}

Certificate CoverCertifies(const Partition& p, Element a, Element b) {
  if (a == b || a < 1 || b < 1 || a > p.n() || b > p.n()) {
    throw Error(ErrorCode::kElementOutOfRange,
                "need two distinct elements of [" + std::to_string(p.n()) + "]");
  }
  if (p.block_count() < 3) return Certificate::kInfeasible;
  const int block_a = p.BlockOf(a);
  const int block_b = p.BlockOf(b);
  const int z_block = p.BlockOf(0);
  if (block_a == z_block || block_b == z_block || block_a == block_b) {
    return Certificate::kInfeasible;
  }
  return Certificate::kFeasible;
}

std::vector<Mask> InfeasibleEvenSets(const SetSystem& d) {
  const Orientation oriented = AllEvenOrientation(d);
  std::vector<Mask> out;
  for (Mask m = 0; m <= FullMask(d.n()); ++m) {
    if (Cardinality(m) % 2 == 0 && !oriented.system.contains(m)) out.push_back(m);
  }
  return out;
}

EncodingRecord EncodeEvenDeltaMatroid(const SetSystem& d) {
  if (d.n() < 2) {
    throw Error(ErrorCode::kPrecondition, "encoding needs n >= 2");
  }
  const Orientation oriented = AllEvenOrientation(d);
  if (CheckSymmetricExchange(oriented.system)) {
    throw Error(ErrorCode::kNotDeltaMatroid, d.ToString() + " is not a delta-matroid");
  }
  const int n = d.n();
  const RegularGraph g = RnComponent(n, Parity::kEven);
  const std::int64_t lambda = -SmallestEigenvalue(n);
  EncodingRecord record;
  record.n = n;
  record.parity = oriented.parity;
  record.alpha = ContainerAlpha(g.degree(), lambda);
  record.sigma_prime = SigmaPrime(n, ContainerSigma(g.degree(), lambda));

  const std::vector<Mask> l = InfeasibleEvenSets(oriented.system);
  KwResult run = KwEncode(g, l, record.alpha);
  record.s = std::move(run.s);
  for (Mask x : record.s) record.covers.push_back(LocalCover(oriented.system, x));
  std::set_intersection(l.begin(), l.end(), run.a.begin(), run.a.end(),
                        std::back_inserter(record.residual));
  return record;
}

std::vector<Mask> DecodeEvenDeltaMatroid(const EncodingRecord& record, int n) {
  if (n != record.n || n < 2) {
    throw Error(ErrorCode::kSizeMismatch, "record was made for another n");
  }
  if (record.covers.size() != record.s.size()) {
    throw Error(ErrorCode::kParse, "record needs one cover per member of S");
  }
  const RegularGraph g = RnComponent(n, Parity::kEven);
  const std::vector<Mask> a = KwReconstructA(g, record.s, record.alpha);

  std::vector<char> infeasible(std::size_t{1} << n, 0);
  for (std::size_t i = 0; i < record.s.size(); ++i) {
    const Mask x = record.s[i];
    const Partition& cover = record.covers[i];
    if (cover.n() != n) {
      throw Error(ErrorCode::kInvalidPartition, "cover is over another ground set");
    }
    infeasible[x] = 1;
    for (Element p = 1; p <= n; ++p) {
      for (Element q = p + 1; q <= n; ++q) {
        if (CoverCertifies(cover, p, q) == Certificate::kInfeasible) {
          infeasible[x ^ Pair(p, q)] = 1;
        }
      }
    }
  }
  for (Mask m : record.residual) {
    if (!std::binary_search(a.begin(), a.end(), m)) {
      throw Error(ErrorCode::kParse,
                  "residual set " + std::to_string(m) + " lies outside A");
    }
    infeasible[m] = 1;
  }
  std::vector<Mask> l;
  for (Mask m = 0; m < infeasible.size(); ++m) {
    if (infeasible[m]) l.push_back(m);
  }
  return l;
}

SetSystem ReconstructEvenDeltaMatroid(const EncodingRecord& record) {
  const std::vector<Mask> l = DecodeEvenDeltaMatroid(record, record.n);
  std::vector<Mask> feasible;
  for (Mask m = 0; m <= FullMask(record.n); ++m) {
    if (Cardinality(m) % 2 == 0 && !std::binary_search(l.begin(), l.end(), m)) {
      feasible.push_back(m);
    }
  }
  SetSystem even = SetSystem::FromMasks(record.n, feasible);
  return record.parity == Parity::kOdd ? Twist(even, ElementBit(1)) : even;
}

mpz_class BellNumber(int k) {
  if (k < 0) throw Error(ErrorCode::kPrecondition, "Bell numbers need k >= 0");
  // Bell triangle: each row starts with the last entry of the previous row.
  std::vector<mpz_class> row = {1};
  for (int i = 1; i <= k; ++i) {
    std::vector<mpz_class> next = {row.back()};
    for (const mpz_class& v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

BoundReport BoundCalculator(int n) {
  if (n < 3 || n > 62) {
    throw Error(ErrorCode::kPrecondition, "the bound is evaluated for 3 <= n <= 62");
  }
  const std::int64_t degree = static_cast<std::int64_t>(n) * (n - 1) / 2;
  const std::int64_t lambda = n / 2;
  const std::int64_t half = std::int64_t{1} << (n - 1);
  BoundReport report;
  report.n = n;
  report.alpha = Fraction(lambda, degree + lambda);
  report.sigma = ContainerSigma(degree, lambda);
  report.sigma_prime = SigmaPrime(n, report.sigma);
  constexpr double kMargin = 1e-9;
  const double sp = report.sigma_prime.value();
  report.sigma_prime_in_range =
      report.sigma <= sp + kMargin &&
      sp <= report.sigma + std::ldexp(1.0, -(n - 2)) + kMargin;

  report.bell = BellNumber(n + 1);
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), n + 1, n + 1);
  report.bell_within_power = report.bell <= power;

  const double scaled = sp * static_cast<double>(half);
  report.log_e_n_bound = std::log2(sp) + n +
                         scaled * (std::log2(std::numbers::e) - std::log2(sp)) +
                         (n + 1) * scaled * std::log2(static_cast<double>(n + 1)) +
                         static_cast<double>(half) / n;
  return report;
}

bool BoundDominates(std::uint64_t count, double log2_bound) {
  return std::log2(static_cast<double>(count)) <= log2_bound;
}

}  // namespace dm
