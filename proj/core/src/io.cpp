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

#include "dm/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "dm/error.hpp"

namespace dm {
namespace {

using nlohmann::json;

[[noreturn]] void FieldError(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kParse, "field '" + field + "': " + what);
}

const json& Require(const json& j, const std::string& field) {
  if (!j.is_object()) FieldError("<root>", "expected an object");
  const auto it = j.find(field);
  if (it == j.end()) FieldError(field, "missing");
  return *it;
}

int ReadGroundSize(const json& j) {
  const json& n = Require(j, "n");
  if (!n.is_number_integer()) FieldError("n", "expected an integer");
  const auto value = n.get<std::int64_t>();
  if (value < 0 || value > kMaxGroundSize) {
    FieldError("n", "must lie in [0, 16], got " + std::to_string(value));
  }
  return static_cast<int>(value);
}

std::vector<Mask> ReadMasks(const json& j, const std::string& field, int n,
                            bool unique) {
  const json& arr = Require(j, field);
  if (!arr.is_array()) FieldError(field, "expected an array of masks");
  std::vector<Mask> out;
  std::set<Mask> seen;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string where = field + "[" + std::to_string(i) + "]";
    if (!arr[i].is_number_integer()) FieldError(where, "expected an integer mask");
    const auto m = arr[i].get<std::int64_t>();
    if (m < 0 || m >= (std::int64_t{1} << n)) {
      FieldError(where, "mask " + std::to_string(m) + " outside [0, 2^" +
                            std::to_string(n) + ")");
    }
    if (unique && !seen.insert(static_cast<Mask>(m)).second) {
      FieldError(where, "duplicate mask " + std::to_string(m));
    }
    out.push_back(static_cast<Mask>(m));
  }
  return out;
}

Fraction ReadFraction(const json& j, const std::string& field) {
  const json& v = Require(j, field);
  if (!v.is_string()) FieldError(field, "expected a fraction string \"p/q\"");
  try {
    return Fraction::Parse(v.get<std::string>());
  } catch (const Error& e) {
    FieldError(field, e.what());
  }
}

}  // namespace

json SetSystemToJson(const SetSystem& s) {
  return json{{"n", s.n()}, {"feasible", s.masks()}};
}

SetSystem SetSystemFromJson(const json& j) {
  const int n = ReadGroundSize(j);
  return SetSystem::FromMasks(n, ReadMasks(j, "feasible", n, true));
}

json RecordToJson(const EncodingRecord& record) {
  json covers = json::array();
  for (const Partition& p : record.covers) covers.push_back(p.blocks());
  return json{{"n", record.n},
              {"parity", record.parity == Parity::kEven ? "even" : "odd"},
              {"S", record.s},
              {"covers", covers},
              {"residual", record.residual},
              {"alpha", record.alpha.ToString()},
              {"sigma_prime", record.sigma_prime.ToString()}};
}

EncodingRecord RecordFromJson(const json& j) {
  EncodingRecord record;
  record.n = ReadGroundSize(j);
  const json& parity = Require(j, "parity");
  if (parity == "even") {
    record.parity = Parity::kEven;
  } else if (parity == "odd") {
    record.parity = Parity::kOdd;
  } else {
    FieldError("parity", "expected \"even\" or \"odd\"");
  }
  record.s = ReadMasks(j, "S", record.n, true);
  record.residual = ReadMasks(j, "residual", record.n, true);
  std::sort(record.residual.begin(), record.residual.end());
  const json& covers = Require(j, "covers");
  if (!covers.is_array()) FieldError("covers", "expected an array of partitions");
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const std::string where = "covers[" + std::to_string(i) + "]";
    try {
      record.covers.emplace_back(
          record.n, covers[i].get<std::vector<std::vector<int>>>());
    } catch (const json::exception&) {
      FieldError(where, "expected a list of integer blocks");
    } catch (const Error& e) {
      FieldError(where, e.what());
    }
  }
  record.alpha = ReadFraction(j, "alpha");
  record.sigma_prime = ReadFraction(j, "sigma_prime");
  return record;
}

std::string VertexListing(const VertexSet& v) {
  std::ostringstream out;
  for (Mask m : v.members()) out << m << '\n';
  return out.str();
}

json ParseJsonText(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParse, source + ": " + e.what());
  }
}

json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseJsonText(buffer.str(), path.string());
}

void WriteTextFile(const std::filesystem::path& path, const std::string& text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot open " + tmp.string());
    out << text;
    if (!out) throw Error(ErrorCode::kIo, "short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot rename into " + path.string());
  }
}

}  // namespace dm
