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

#include <functional>
#include <random>

#include "dm/construct.hpp"
#include "dm/error.hpp"
#include "dm/io.hpp"

namespace dm {
namespace {

using nlohmann::json;

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

std::string MessageOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(SetSystemJsonTest, RoundTrip) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng() % 11);
    std::vector<Mask> masks;
    for (Mask m = 0; m <= FullMask(n); ++m) {
      if (rng() % 3 == 0) masks.push_back(m);
      if (n == 0) break;
    }
    const SetSystem s = SetSystem::FromMasks(n, masks);
    EXPECT_EQ(SetSystemFromJson(SetSystemToJson(s)), s);
    EXPECT_EQ(SetSystemFromJson(json::parse(SetSystemToJson(s).dump())), s);
  }
  EXPECT_EQ(SetSystemToJson(SetSystem::FromMasks(2, {3, 0})).dump(),
            R"({"feasible":[0,3],"n":2})");
}

TEST(SetSystemJsonTest, AcceptsUnsortedMasks) {
  EXPECT_EQ(SetSystemFromJson(json::parse(R"({"n":2,"feasible":[3,0]})")),
            SetSystem::FromMasks(2, {0, 3}));
}

TEST(SetSystemJsonTest, FieldDiagnostics) {
  auto parse = [](const char* text) { return SetSystemFromJson(json::parse(text)); };
  EXPECT_EQ(CodeOf([&] { parse(R"({"n":2,"feasible":[4]})"); }), ErrorCode::kParse);
  EXPECT_NE(MessageOf([&] { parse(R"({"n":2,"feasible":[0,4]})"); }).find("feasible[1]"),
            std::string::npos);
  EXPECT_NE(MessageOf([&] { parse(R"({"n":2,"feasible":[1,1]})"); }).find("duplicate"),
            std::string::npos);
  EXPECT_NE(MessageOf([&] { parse(R"({"feasible":[]})"); }).find("'n'"), std::string::npos);
  EXPECT_EQ(CodeOf([&] { parse(R"({"n":17,"feasible":[]})"); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([&] { parse(R"({"n":2,"feasible":[-1]})"); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([&] { parse(R"({"n":2,"feasible":["a"]})"); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([&] { parse(R"({"n":2,"feasible":{}})"); }), ErrorCode::kParse);
  EXPECT_EQ(CodeOf([&] { parse(R"([1,2])"); }), ErrorCode::kParse);
}

TEST(JsonTextTest, SyntaxErrorsCarryPosition) {
  const std::string message =
      MessageOf([] { ParseJsonText("{\n  \"n\": 2,\n  \"feasible\": [0,\n}", "input"); });
  EXPECT_NE(message.find("input"), std::string::npos);
  EXPECT_NE(message.find("line 4"), std::string::npos);
  EXPECT_EQ(CodeOf([] { ParseJsonText("{", "x"); }), ErrorCode::kParse);
}

TEST(RecordJsonTest, RoundTrip) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + trial % 4;
    const SetSystem d = Twist(StackedEvenDeltaMatroid(n, RandomStackedLayers(n, rng)),
                              trial % 2 ? 1u : 0u);
    const EncodingRecord r = EncodeEvenDeltaMatroid(d);
    EXPECT_EQ(RecordFromJson(json::parse(RecordToJson(r).dump())), r);
  }
}

TEST(RecordJsonTest, Layout) {
  EncodingRecord r;
  r.n = 4;
  r.parity = Parity::kOdd;
  r.s = {5, 3};
  r.covers = {Partition(4, {{0, 3, 4}, {1}, {2}}), Partition::SingleBlock(4)};
  r.residual = {6};
  r.alpha = Fraction(1, 4);
  r.sigma_prime = Fraction(3, 8);
  EXPECT_EQ(RecordToJson(r).dump(),
            R"({"S":[5,3],"alpha":"1/4","covers":[[[0,3,4],[1],[2]],[[0,1,2,3,4]]],)"
            R"("n":4,"parity":"odd","residual":[6],"sigma_prime":"3/8"})");
}

TEST(RecordJsonTest, Diagnostics) {
  const json good = json::parse(
      R"({"S":[3],"alpha":"1/4","covers":[[[0,3,4],[1],[2]]],"n":4,)"
      R"("parity":"even","residual":[],"sigma_prime":"3/8"})");
  EXPECT_NO_THROW(RecordFromJson(good));
  auto broken = [&](const char* key, json value) {
    json j = good;
    j[key] = std::move(value);
    return MessageOf([&] { RecordFromJson(j); });
  };
  EXPECT_NE(broken("parity", "both").find("parity"), std::string::npos);
  EXPECT_NE(broken("alpha", "x").find("alpha"), std::string::npos);
  EXPECT_NE(broken("covers", json::parse("[[[0,1]]]")).find("covers[0]"),
            std::string::npos);
  EXPECT_NE(broken("covers", json::parse("[\"x\"]")).find("covers[0]"), std::string::npos);
  EXPECT_NE(broken("S", json::parse("[16]")).find("S[0]"), std::string::npos);
  json missing = good;
  missing.erase("residual");
  EXPECT_NE(MessageOf([&] { RecordFromJson(missing); }).find("residual"),
            std::string::npos);
}

TEST(VertexListingTest, OneMaskPerLine) {
  EXPECT_EQ(VertexListing(VertexSet(4, {9, 6})), "6\n9\n");
  EXPECT_EQ(VertexListing(VertexSet(4)), "");
}

TEST(TextFileTest, WriteIsAtomicAndReadable) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("dm-io-" + std::to_string(std::random_device{}()));
  std::filesystem::create_directories(dir);
  const auto path = dir / "s.json";
  WriteTextFile(path, R"({"n":1,"feasible":[0,1]})");
  EXPECT_FALSE(std::filesystem::exists(dir / "s.json.tmp"));
  EXPECT_EQ(SetSystemFromJson(ReadJsonFile(path)), SetSystem::PowerSet(1));
  EXPECT_EQ(CodeOf([&] { ReadJsonFile(dir / "none.json"); }), ErrorCode::kIo);
  EXPECT_EQ(CodeOf([&] { WriteTextFile(dir / "no" / "such" / "dir", "x"); }),
            ErrorCode::kIo);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace dm
