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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dm/enumerate.hpp"
#include "dm/error.hpp"
#include "dm/level_store.hpp"
#include "oracles.hpp"

namespace dm {
namespace {

// Shared across tests; level 5 takes about a second.
LevelStore& Store() {
  static LevelStore store;
  return store;
}

SetSystem Permute(const SetSystem& s, const std::vector<int>& perm) {
  std::vector<Mask> out;
  s.ForEachFeasible([&](Mask m) {
    Mask image = 0;
    for (int i = 0; i < s.n(); ++i) {
      if ((m >> i) & 1u) image |= Mask{1} << perm[i];
    }
    out.push_back(image);
  });
  return SetSystem::FromMasks(s.n(), out);
}

TEST(EnumerateTest, LevelSizes) {
  const std::vector<std::size_t> expected = {1, 3, 15, 155, 5959, 4980259};
  for (int n = 0; n <= 5; ++n) EXPECT_EQ(Store().Level(n).size(), expected[n]) << n;
}

TEST(EnumerateTest, EqualsBruteForceUpToFour) {
  for (int n = 1; n <= 4; ++n) {
    const auto level = Store().Level(n).systems();
    const std::vector<std::uint64_t> brute = oracle::BruteForceLevel(n);
    EXPECT_TRUE(std::equal(level.begin(), level.end(), brute.begin(), brute.end()))
        << "level " << n;
  }
}

TEST(EnumerateTest, LevelFiveEntriesPassTheAxiom) {
  const LevelCache& five = Store().Level(5);
  std::mt19937_64 rng(21);
  for (int i = 0; i < 3000; ++i) {
    const SetSystem s = five.system(rng() % five.size());
    ASSERT_TRUE(oracle::IsDeltaMatroid(5, s.masks())) << s.ToString();
  }
}

TEST(EnumerateTest, NoLevelFiveDeltaMatroidIsMissing) {
  // Random systems on [5] that pass the axiom must be listed.
  const LevelCache& five = Store().Level(5);
  std::mt19937_64 rng(22);
  int found = 0;
  for (int i = 0; i < 200000; ++i) {
    // Sparse and dense words both produce delta-matroids often enough.
    bits::Word w = rng() & rng() & bits::UniverseMask(5);
    if (i % 2) w = ~w & bits::UniverseMask(5);
    const SetSystem s = SetSystem::FromWord(5, w);
    if (!s.proper()) continue;
    const bool dm = IsDeltaMatroid(s);
    ASSERT_EQ(five.contains(w), dm) << s.ToString();
    found += dm;
  }
  EXPECT_GT(found, 0);
}

TEST(EnumerateTest, ThreadCountDoesNotChangeTheResult) {
  const LevelCache& three = Store().Level(3);
  const LevelCache& four = Store().Level(4);
  for (int threads : {1, 2, 3, 7}) {
    EXPECT_EQ(EnumerateLevel(three, EnumerateOptions{threads}), four) << threads;
  }
}

TEST(EnumerateTest, LevelSixIsNotListed) {
  try {
    EnumerateLevel(Store().Level(5));
    FAIL() << "expected a resource-limit error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResourceLimit);
  }
}

TEST(LevelCacheTest, RejectsMalformedLists) {
  EXPECT_THROW(LevelCache(2, {3, 1}), Error);
  EXPECT_THROW(LevelCache(2, {1, 1}), Error);
  EXPECT_THROW(LevelCache(2, {0}), Error);
  EXPECT_THROW(LevelCache(1, {1u << 4}), Error);
  const LevelCache ok(2, {1, 5, 15});
  EXPECT_TRUE(ok.contains(5));
  EXPECT_FALSE(ok.contains(4));
  EXPECT_EQ(ok.IndexOf(15), 2u);
  EXPECT_EQ(ok.IndexOf(4), 3u);
}

TEST(LevelCacheTest, ValidateLevel) {
  for (int n = 0; n <= 4; ++n) EXPECT_NO_THROW(ValidateLevel(Store().Level(n)));
  // Dropping an entry breaks closure under twists.
  std::vector<bits::Word> partial(Store().Level(3).systems().begin(),
                                  Store().Level(3).systems().end());
  partial.erase(partial.begin() + 7);
  EXPECT_THROW(ValidateLevel(LevelCache(3, partial)), Error);
  // A non-delta-matroid closed under twists, next to the full power set.
  std::vector<bits::Word> bogus = {bits::UniverseMask(3)};
  for (Mask a = 0; a < 8; ++a) {
    bogus.push_back(Twist(SetSystem::FromMasks(3, {0, 7}), a).word());
  }
  std::sort(bogus.begin(), bogus.end());
  bogus.erase(std::unique(bogus.begin(), bogus.end()), bogus.end());
  EXPECT_THROW(ValidateLevel(LevelCache(3, bogus)), Error);
}

TEST(AntipodalTest, Counts) {
  EXPECT_EQ(AntipodalSystems(5).size(), 16u);
  const std::vector<SetSystem> one = AntipodalSystems(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], SetSystem::FromMasks(1, {0, 1}));
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(AntipodalSystems(n).size(), std::size_t{1} << (n - 1));
  }
}

TEST(AntipodalTest, FiveElementSystemsViolateTheAxiomButHaveGoodMinors) {
  const LevelCache& four = Store().Level(4);
  for (const SetSystem& s : AntipodalSystems(5)) {
    EXPECT_EQ(s.size(), 2u);
    EXPECT_FALSE(oracle::IsDeltaMatroid(5, s.masks())) << s.ToString();
    for (Element e = 1; e <= 5; ++e) {
      for (MinorKind kind : {MinorKind::kDelete, MinorKind::kContract}) {
        const SetSystem m = Minor(s, e, kind);
        EXPECT_TRUE(!m.proper() || four.contains(m));
      }
    }
    EXPECT_FALSE(BcnFastCheck(s, four));
  }
}

TEST(BcnTest, AgreesWithTheAxiomOnRandomComposedSystems) {
  const LevelCache& four = Store().Level(4);
  std::mt19937_64 rng(23);
  auto draw = [&]() -> bits::Word {
    const std::uint64_t i = rng() % (four.size() + 1);
    return i == four.size() ? 0 : four.systems()[i];
  };
  int positives = 0;
  int checked = 0;
  while (checked < 10000) {
    const bits::Word c = draw();
    const bits::Word d = draw();
    if (c == 0 && d == 0) continue;
    const SetSystem s = Compose(SetSystem::FromWord(4, c), SetSystem::FromWord(4, d));
    const bool full = IsDeltaMatroid(s);
    ASSERT_EQ(BcnFastCheck(s, four), full) << s.ToString();
    ASSERT_EQ(ComposedCandidateIsDeltaMatroid(s.word(), 5, four), full);
    positives += full;
    ++checked;
  }
  EXPECT_GT(positives, 0);
}

TEST(BcnTest, ThreeOrMoreFeasibleSetsWithGoodMinorsPass) {
  const LevelCache& four = Store().Level(4);
  const LevelCache& five = Store().Level(5);
  std::mt19937_64 rng(24);
  for (int i = 0; i < 2000; ++i) {
    const SetSystem s = five.system(rng() % five.size());
    if (s.size() >= 3) {
      EXPECT_TRUE(BcnFastCheck(s, four));
    }
  }
}

TEST(BcnTest, Preconditions) {
  EXPECT_THROW(BcnFastCheck(SetSystem::PowerSet(4), Store().Level(3)), Error);
  EXPECT_THROW(BcnFastCheck(SetSystem::PowerSet(5), Store().Level(3)), Error);
  EXPECT_THROW(BcnFastCheck(SetSystem(5), Store().Level(4)), Error);
}

TEST(GammaTest, Values) {
  EXPECT_DOUBLE_EQ(Gamma(1, 3), 1.0);
  EXPECT_DOUBLE_EQ(Gamma(2, 15), 1.0);
  EXPECT_NEAR(Gamma(5, 4980259), 0.476, 5e-4);
}

TEST(EvenCountTest, MatchesFilteredBruteForce) {
  for (int n = 1; n <= 4; ++n) {
    std::uint64_t total = 0;
    std::uint64_t all_even = 0;
    for (std::uint64_t w : oracle::BruteForceLevel(n)) {
      const oracle::Family f = oracle::FromWord(n, w);
      const int parity = oracle::Popcount(f.front()) % 2;
      if (std::all_of(f.begin(), f.end(),
                      [&](Mask m) { return oracle::Popcount(m) % 2 == parity; })) {
        ++total;
        all_even += parity == 0;
      }
    }
    const EvenCount got = CountEven(Store().Level(n));
    EXPECT_EQ(got.total, total) << n;
    EXPECT_EQ(got.all_even, all_even) << n;
  }
  EXPECT_EQ(CountEven(Store().Level(1)).total, 2u);
}

TEST(EvenCountTest, HalfAreAllEven) {
  for (int n = 1; n <= 5; ++n) {
    const EvenCount c = CountEven(Store().Level(n));
    EXPECT_EQ(2 * c.all_even, c.total) << n;
  }
}

TEST(CanonicalFormTest, InvariantUnderTwistsAndRelabelling) {
  std::mt19937_64 rng(25);
  const LevelCache& four = Store().Level(4);
  for (int i = 0; i < 300; ++i) {
    const SetSystem s = four.system(rng() % four.size());
    std::vector<int> perm(4);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const SetSystem image = Permute(Twist(s, static_cast<Mask>(rng() % 16)), perm);
    EXPECT_EQ(CanonicalForm(image.word(), 4), CanonicalForm(s.word(), 4));
    EXPECT_LE(CanonicalForm(s.word(), 4), s.word());
  }
}

TEST(TwistClassTest, ClassesPartitionTheLevel) {
  for (int n = 1; n <= 4; ++n) {
    const LevelCache& level = Store().Level(n);
    const std::vector<TwistClass> classes = TwistClasses(level);
    std::uint64_t total = 0;
    for (const TwistClass& c : classes) {
      EXPECT_TRUE(level.contains(c.representative));
      EXPECT_EQ(CanonicalForm(c.representative, n), c.representative);
      total += c.size;
    }
    EXPECT_EQ(total, level.size());
  }
}

TEST(TwistClassTest, CompatibilityCountsAreClassInvariant) {
  const LevelCache& four = Store().Level(4);
  std::mt19937_64 rng(26);
  for (int i = 0; i < 200; ++i) {
    const bits::Word d = four.systems()[rng() % four.size()];
    EXPECT_EQ(CountCompatible(d, four), CountCompatible(CanonicalForm(d, 4), four));
  }
}

TEST(TwistClassTest, CompatibilityCountsAreClassInvariantAtLevelFive) {
  const LevelCache& five = Store().Level(5);
  std::mt19937_64 rng(27);
  for (int i = 0; i < 3; ++i) {
    const bits::Word d = five.systems()[rng() % five.size()];
    EXPECT_EQ(CountCompatible(d, five), CountCompatible(CanonicalForm(d, 5), five));
  }
}

TEST(TwistClassTest, ClassCountReproducesTheNextLevel) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(CountLevelByClasses(Store().Level(n)), Store().Level(n + 1).size()) << n;
  }
}

TEST(TwistClassTest, CompatibilitySumsToTheNextLevel) {
  // Summing per-system counts directly, with the improper system as D1.
  const LevelCache& three = Store().Level(3);
  std::uint64_t total = CountCompatible(0, three);
  for (bits::Word d : three.systems()) total += CountCompatible(d, three);
  EXPECT_EQ(total, 5959u);
}

}  // namespace
}  // namespace dm
