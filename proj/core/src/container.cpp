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

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "dm/encode.hpp"
#include "dm/error.hpp"

namespace dm {
namespace {

std::uint64_t Binomial(int n, int k) {
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

void RequireRn(int n) {
  if (n < 2 || n > kMaxGroundSize) {
    throw Error(ErrorCode::kPrecondition,
                "R_n needs 2 <= n <= 16, got " + std::to_string(n));
  }
}

std::vector<SpectrumEntry> Merge(std::vector<SpectrumEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.value < b.value; });
  std::vector<SpectrumEntry> out;
  for (const auto& e : entries) {
    if (e.multiplicity == 0) continue;
    if (!out.empty() && out.back().value == e.value) {
      out.back().multiplicity += e.multiplicity;
    } else {
      out.push_back(e);
    }
  }
  return out;
}

// Max-degree peeling shared by encoding and replay. `in_l(v)` decides the
// branch for a picked vertex; `on_swept(v)` sees vertices removed as
// neighbours of an L-pick.
template <typename InL, typename OnSwept>
std::vector<int> Peel(const RegularGraph& g, Fraction alpha, InL&& in_l,
                      OnSwept&& on_swept, std::vector<KwStep>* trace) {
  if (alpha.num <= 0 || alpha.num >= alpha.den) {
    throw Error(ErrorCode::kAlphaOutOfRange,
                "alpha must lie strictly between 0 and 1, got " + alpha.ToString());
  }
  const int count = g.vertex_count();
  std::vector<char> alive(count, 1);
  std::vector<int> degree(count, g.degree());
  // by_degree[k] holds the live vertices of degree k in G[A].
  std::vector<std::set<int>> by_degree(g.degree() + 1);
  for (int v = 0; v < count; ++v) by_degree[g.degree()].insert(v);
  int top = g.degree();  // degrees only fall, so the maximum only moves down
  std::int64_t remaining = count;

  auto remove = [&](int u) {
    alive[u] = 0;
    by_degree[degree[u]].erase(u);
    --remaining;
    for (int w : g.neighbours(u)) {
      if (!alive[w]) continue;
      by_degree[degree[w]].erase(w);
      --degree[w];
      by_degree[degree[w]].insert(w);
    }
  };

  while (remaining * alpha.den > alpha.num * static_cast<std::int64_t>(count)) {
    while (by_degree[top].empty()) --top;
    const int v = *by_degree[top].begin();
    const bool l_branch = in_l(v);
    if (trace) trace->push_back({g.label(v), l_branch});
    if (l_branch) {
      std::vector<int> swept;
      for (int w : g.neighbours(v)) {
        if (alive[w]) swept.push_back(w);
      }
      remove(v);
      for (int w : swept) {
        on_swept(w);
        remove(w);
      }
    } else {
      remove(v);
    }
  }

  std::vector<int> survivors;
  for (int v = 0; v < count; ++v) {
    if (alive[v]) survivors.push_back(v);
  }
  return survivors;
}

}  // namespace

Fraction::Fraction(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0 || numerator < 0) {
    throw Error(ErrorCode::kPrecondition, "fraction must be non-negative with a positive denominator");
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num = numerator / g;
  den = denominator / g;
}

std::string Fraction::ToString() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

Fraction Fraction::Parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) throw std::invalid_argument(text);
    const std::string num_text = text.substr(0, slash);
    const std::string den_text = text.substr(slash + 1);
    const long long num = std::stoll(num_text, &used);
    if (used != num_text.size()) throw std::invalid_argument(text);
    const long long den = std::stoll(den_text, &used);
    if (used != den_text.size()) throw std::invalid_argument(text);
    return Fraction(num, den);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kParse, "not a fraction: \"" + text + "\"");
  }
}

RegularGraph::RegularGraph(std::vector<Mask> labels,
                           std::vector<std::vector<int>> adjacency)
    : labels_(std::move(labels)) {
  if (labels_.size() != adjacency.size()) {
    throw Error(ErrorCode::kSizeMismatch, "one adjacency list per vertex required");
  }
  for (std::size_t i = 1; i < labels_.size(); ++i) {
    if (labels_[i - 1] >= labels_[i]) {
      throw Error(ErrorCode::kPrecondition, "vertex labels must be strictly increasing");
    }
  }
  degree_ = adjacency.empty() ? 0 : static_cast<int>(adjacency[0].size());
  adjacency_.reserve(labels_.size() * degree_);
  for (auto& row : adjacency) {
    if (static_cast<int>(row.size()) != degree_) {
      throw Error(ErrorCode::kPrecondition, "graph is not regular");
    }
    std::sort(row.begin(), row.end());
    for (int w : row) {
      if (w < 0 || w >= static_cast<int>(labels_.size())) {
        throw Error(ErrorCode::kPrecondition, "neighbour index out of range");
      }
      adjacency_.push_back(w);
    }
  }
}

int RegularGraph::IndexOf(Mask m) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), m);
  if (it == labels_.end() || *it != m) return -1;
  return static_cast<int>(it - labels_.begin());
}

RegularGraph RnComponent(int n, Parity parity) {
  RequireRn(n);
  const int want = parity == Parity::kEven ? 0 : 1;
  std::vector<Mask> labels;
  std::vector<int> index(std::size_t{1} << n, -1);
  for (Mask m = 0; m <= FullMask(n); ++m) {
    if (Cardinality(m) % 2 == want) {
      index[m] = static_cast<int>(labels.size());
      labels.push_back(m);
    }
  }
  std::vector<std::vector<int>> adjacency(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        adjacency[v].push_back(index[labels[v] ^ (Mask{1} << a) ^ (Mask{1} << b)]);
      }
    }
  }
  return RegularGraph(std::move(labels), std::move(adjacency));
}

bool RnMatrixIdentity(int n) {
  if (n < 2 || n > 8) {
    throw Error(ErrorCode::kSizeLimit,
                "dense matrix identity is limited to 2 <= n <= 8");
  }
  const int size = 1 << n;
  Eigen::MatrixXi q = Eigen::MatrixXi::Zero(size, size);
  Eigen::MatrixXi r = Eigen::MatrixXi::Zero(size, size);
  for (int u = 0; u < size; ++u) {
    for (int v = 0; v < size; ++v) {
      const int distance = std::popcount(static_cast<unsigned>(u ^ v));
      if (distance == 1) q(u, v) = 1;
      if (distance == 2) r(u, v) = 1;
    }
  }
  const Eigen::MatrixXi lhs = 2 * r;
  const Eigen::MatrixXi rhs = q * q - n * Eigen::MatrixXi::Identity(size, size);
  return lhs == rhs;
}

std::vector<std::int64_t> RnSpectrumValues(int n) {
  RequireRn(n);
  std::vector<std::int64_t> values;
  for (std::int64_t lambda = -n; lambda <= n; lambda += 2) {
    values.push_back((lambda * lambda - n) / 2);
  }
  return values;
}

std::vector<SpectrumEntry> RnSpectrum(int n) {
  RequireRn(n);
  // Q_n has eigenvalue n - 2k with multiplicity C(n, k).
  std::vector<SpectrumEntry> entries;
  for (int k = 0; k <= n; ++k) {
    const std::int64_t lambda = n - 2 * k;
    entries.push_back({(lambda * lambda - n) / 2, Binomial(n, k)});
  }
  return Merge(std::move(entries));
}

std::vector<SpectrumEntry> RnComponentSpectrum(int n) {
  std::vector<SpectrumEntry> entries = RnSpectrum(n);
  for (auto& e : entries) e.multiplicity /= 2;
  return entries;
}

std::int64_t SmallestEigenvalue(int n) { return RnSpectrum(n).front().value; }

KwResult KwEncode(const RegularGraph& g, std::span<const Mask> l, Fraction alpha) {
  std::vector<char> in_l(g.vertex_count(), 0);
  for (Mask m : l) {
    const int v = g.IndexOf(m);
    if (v < 0) {
      throw Error(ErrorCode::kPrecondition,
                  "L member " + std::to_string(m) + " is not a vertex");
    }
    in_l[v] = 1;
  }
  KwResult result;
  const std::vector<int> survivors = Peel(
      g, alpha,
      [&](int v) {
        if (in_l[v]) result.s.push_back(g.label(v));
        return in_l[v] != 0;
      },
      [](int) {}, &result.trace);
  for (int v : survivors) result.a.push_back(g.label(v));
  return result;
}

std::vector<Mask> KwReconstructA(const RegularGraph& g, std::span<const Mask> s,
                                 Fraction alpha) {
  std::vector<int> order;
  std::vector<char> claimed(g.vertex_count(), 0);
  for (Mask m : s) {
    const int v = g.IndexOf(m);
    if (v < 0 || claimed[v]) {
      throw Error(ErrorCode::kInconsistentS,
                  "S member " + std::to_string(m) + " is not a distinct vertex");
    }
    claimed[v] = 1;
    order.push_back(v);
  }
  std::size_t next = 0;
  const std::vector<int> survivors = Peel(
      g, alpha,
      [&](int v) {
        if (!claimed[v]) return false;
        if (next >= order.size() || order[next] != v) {
          throw Error(ErrorCode::kInconsistentS,
                      "S member " + std::to_string(g.label(v)) + " picked out of order");
        }
        ++next;
        return true;
      },
      [&](int w) {
        if (claimed[w]) {
          throw Error(ErrorCode::kInconsistentS,
                      "S member " + std::to_string(g.label(w)) +
                          " is swept before its turn");
        }
      },
      nullptr);
  if (next != order.size()) {
    throw Error(ErrorCode::kInconsistentS,
                "procedure stops before S is exhausted");
  }
  std::vector<Mask> a;
  for (int v : survivors) a.push_back(g.label(v));
  return a;
}

Fraction ContainerAlpha(int degree, std::int64_t lambda) {
  return Fraction(lambda, degree + lambda);
}

std::size_t ContainerSizeBound(std::size_t vertex_count, int degree,
                               std::int64_t lambda) {
  const double sigma = std::log(degree + 1.0) / static_cast<double>(degree + lambda);
  return static_cast<std::size_t>(std::ceil(sigma * static_cast<double>(vertex_count)));
}

}  // namespace dm
