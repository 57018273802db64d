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

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "dm/count.hpp"
#include "dm/error.hpp"
#include "dm/level_store.hpp"

namespace dm {
namespace {

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("dm-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

std::string ReadBytes(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void WriteBytes(const std::filesystem::path& p, const std::string& bytes) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << bytes;
}

TEST(LevelFileTest, NameCarriesLevelAndVersion) {
  EXPECT_EQ(LevelFileName(4), "level-4.v1.dmlc");
}

TEST(LevelFileTest, RoundTripAndLayout) {
  TempDir dir;
  LevelStore store;
  for (int n = 0; n <= 4; ++n) {
    const auto path = dir.path() / LevelFileName(n);
    WriteLevelFile(path, store.Level(n));
    EXPECT_EQ(ReadLevelFile(path), store.Level(n));
    const std::string bytes = ReadBytes(path);
    const std::size_t record = ((std::size_t{1} << n) + 7) / 8;
    EXPECT_EQ(bytes.size(), 14 + store.Level(n).size() * record);
    EXPECT_EQ(bytes.substr(0, 4), "DMLC");
    EXPECT_EQ(bytes[4], 1);
    EXPECT_EQ(bytes[5], n);
    EXPECT_FALSE(std::filesystem::exists(path.string() + ".tmp"));
  }
  // Level 2's least record, the system {{}}, directly follows the header.
  const std::string bytes = ReadBytes(dir.path() / LevelFileName(2));
  EXPECT_EQ(static_cast<unsigned char>(bytes[6]), 15);  // count, little-endian
  EXPECT_EQ(static_cast<unsigned char>(bytes[14]), 1);  // {{}}
}

TEST(LevelFileTest, CorruptFilesAreRejected) {
  TempDir dir;
  LevelStore store;
  const auto path = dir.path() / LevelFileName(3);
  WriteLevelFile(path, store.Level(3));
  const std::string good = ReadBytes(path);

  auto expect_parse_error = [&](const std::string& bytes) {
    WriteBytes(path, bytes);
    try {
      ReadLevelFile(path);
      ADD_FAILURE() << "expected a parse error";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse);
    }
  };
  std::string bad = good;
  bad[0] = 'X';
  expect_parse_error(bad);
  bad = good;
  bad[4] = 2;
  expect_parse_error(bad);
  expect_parse_error(good.substr(0, good.size() - 1));
  expect_parse_error(good + "x");
  bad = good;
  std::swap(bad[14], bad[15]);  // breaks the ascending order
  expect_parse_error(bad);

  try {
    ReadLevelFile(dir.path() / "missing.dmlc");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(LevelStoreTest, WarmCacheLoadsWithoutRecomputation) {
  TempDir dir;
  {
    LevelStore cold(dir.path());
    EXPECT_EQ(cold.Level(4).size(), 5959u);
    EXPECT_EQ(cold.computed_levels(), 4);
    EXPECT_EQ(cold.loaded_levels(), 0);
  }
  LevelStore warm(dir.path());
  EXPECT_EQ(warm.Level(4).size(), 5959u);
  EXPECT_EQ(warm.computed_levels(), 0);
  EXPECT_EQ(warm.loaded_levels(), 1);
}

TEST(LevelStoreTest, CorruptFileIsRecomputed) {
  TempDir dir;
  { LevelStore(dir.path()).Level(3); }
  const auto path = dir.path() / LevelFileName(3);
  std::string bytes = ReadBytes(path);
  bytes.resize(bytes.size() - 3);
  WriteBytes(path, bytes);

  LevelStore store(dir.path());
  EXPECT_EQ(store.Level(3).size(), 155u);
  EXPECT_EQ(store.loaded_levels(), 1);  // level 2 was fine
  EXPECT_EQ(store.computed_levels(), 1);
  EXPECT_EQ(ReadLevelFile(path).size(), 155u);
}

TEST(LevelStoreTest, WellFormedButWrongContentIsRecomputed) {
  TempDir dir;
  LevelStore reference;
  WriteLevelFile(dir.path() / LevelFileName(2), LevelCache(2, {1, 15}));
  LevelStore store(dir.path());
  EXPECT_EQ(store.Level(2), reference.Level(2));
  EXPECT_EQ(store.computed_levels(), 2);
}

TEST(LevelStoreTest, UnlistedLevelsAreAResourceLimit) {
  LevelStore store;
  try {
    store.Level(6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResourceLimit);
  }
}

TEST(CountReportTest, TableUpToFour) {
  LevelStore store;
  const auto rows = CountReports(store, 4, CountOptions{true, false});
  ASSERT_EQ(rows.size(), 4u);
  const std::uint64_t d[] = {3, 15, 155, 5959};
  const std::uint64_t e[] = {2, 6, 30, 294};
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(rows[i].n, i + 1);
    EXPECT_EQ(rows[i].d_n, d[i]);
    EXPECT_EQ(rows[i].e_n, e[i]);
    EXPECT_TRUE(rows[i].meets_even_plus_odd_bound);
  }
  EXPECT_FALSE(rows[0].below_square_of_previous.has_value());
  // d_2 + 1 = (d_1 + 1)^2 = 16; strict from n = 2 on.
  EXPECT_EQ(rows[1].below_square_of_previous, false);
  for (int i = 2; i < 4; ++i) EXPECT_EQ(rows[i].below_square_of_previous, true);
  EXPECT_DOUBLE_EQ(rows[0].gamma, 1.0);
  EXPECT_DOUBLE_EQ(rows[1].gamma, 1.0);
  EXPECT_NEAR(rows[3].gamma, 0.649, 5e-4);
  EXPECT_TRUE(GammaSeriesIsValid(rows));
  EXPECT_FALSE(CountReports(store, 2).front().e_n.has_value());
}

TEST(CountReportTest, Limits) {
  LevelStore store;
  for (auto [n, allow] : {std::pair{6, false}, std::pair{7, true}}) {
    try {
      CountReports(store, n, CountOptions{false, allow});
      ADD_FAILURE() << n;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kResourceLimit);
    }
  }
  EXPECT_THROW(CountReports(store, 0), Error);
  try {
    CountEvenAt(store, 6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCacheUnavailable);
  }
}

TEST(CountReportTest, GammaSeriesValidation) {
  std::vector<CountReport> rows(3);
  rows[0].n = 1, rows[0].gamma = 1.0;
  rows[1].n = 2, rows[1].gamma = 1.0;
  rows[2].n = 3, rows[2].gamma = 0.9;
  EXPECT_TRUE(GammaSeriesIsValid(rows));
  rows[2].gamma = 1.0;
  EXPECT_FALSE(GammaSeriesIsValid(rows));
  rows[2].gamma = -0.1;
  EXPECT_FALSE(GammaSeriesIsValid(rows));
}

}  // namespace
}  // namespace dm
