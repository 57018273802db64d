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

// On-disk persistence of enumeration levels.
//
// File layout, all integers little-endian:
//   bytes 0-3   "DMLC"
//   byte  4     format version (1)
//   byte  5     n
//   bytes 6-13  record count
//   then count records of ceil(2^n / 8) bytes each, bit m of the record
//   (byte m / 8, bit m % 8) being the feasibility of mask m; records are
//   sorted ascending by bitvector value.

#ifndef DM_LEVEL_STORE_HPP_
#define DM_LEVEL_STORE_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "dm/enumerate.hpp"

namespace dm {

inline constexpr std::uint8_t kLevelFileVersion = 1;

// Highest level held as an explicit list.
inline constexpr int kMaxListedLevel = 5;

std::string LevelFileName(int n);

// Writes to a temporary sibling and renames it into place.
void WriteLevelFile(const std::filesystem::path& path, const LevelCache& level);

// Throws kIo if the file cannot be opened and kParse if it is truncated,
// has the wrong magic or version, or its records violate the level
// invariants.
LevelCache ReadLevelFile(const std::filesystem::path& path);

// Hands out complete levels, loading them from `dir` when a valid file is
// present and otherwise enumerating from the level below and persisting the
// result. Corrupt files are recomputed and overwritten.
class LevelStore {
 public:
  explicit LevelStore(std::optional<std::filesystem::path> dir = std::nullopt,
                      EnumerateOptions options = {});

  const LevelCache& Level(int n);

  int computed_levels() const noexcept { return computed_; }
  int loaded_levels() const noexcept { return loaded_; }
  const EnumerateOptions& options() const noexcept { return options_; }

 private:
  std::optional<std::filesystem::path> dir_;
  EnumerateOptions options_;
  std::map<int, LevelCache> levels_;
  int computed_ = 0;
  int loaded_ = 0;
};

}  // namespace dm

#endif  // DM_LEVEL_STORE_HPP_
