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

// Text formats.
//
// Set-system file:   {"n": 3, "feasible": [0, 3, 5, 6]}
//   Masks are integers in [0, 2^n); element i is bit i-1. Output lists the
//   masks ascending; input rejects duplicates and out-of-range masks.
//
// Encoding record:   {"n": 4, "parity": "even", "S": [...],
//                     "covers": [[[0, 3, 4], [1], [2]], ...],
//                     "residual": [...], "alpha": "1/4",
//                     "sigma_prime": "3/8"}
//   Covers list their blocks with z written as element 0.

#ifndef DM_IO_HPP_
#define DM_IO_HPP_

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "dm/construct.hpp"
#include "dm/encode.hpp"
#include "dm/set_system.hpp"

namespace dm {

nlohmann::json SetSystemToJson(const SetSystem& s);
// Throws kParse with the offending field in the message.
SetSystem SetSystemFromJson(const nlohmann::json& j);

nlohmann::json RecordToJson(const EncodingRecord& record);
EncodingRecord RecordFromJson(const nlohmann::json& j);

// One decimal mask per line.
std::string VertexListing(const VertexSet& v);

// Parses a whole document; syntax errors become kParse with line and column.
nlohmann::json ParseJsonText(const std::string& text, const std::string& source);
nlohmann::json ReadJsonFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, const std::string& text);

}  // namespace dm

#endif  // DM_IO_HPP_
