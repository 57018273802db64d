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

#include "dm/level_store.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <system_error>
#include <utility>
#include <vector>

#include "dm/error.hpp"

namespace dm {
namespace {

constexpr std::array<char, 4> kMagic = {'D', 'M', 'L', 'C'};
constexpr std::size_t kHeaderSize = 4 + 1 + 1 + 8;

std::size_t RecordBytes(int n) { return ((std::size_t{1} << n) + 7) / 8; }

}  // namespace

std::string LevelFileName(int n) {
  return "level-" + std::to_string(n) + ".v" +
         std::to_string(kLevelFileVersion) + ".dmlc";
}

void WriteLevelFile(const std::filesystem::path& path, const LevelCache& level) {
  const std::size_t record_bytes = RecordBytes(level.n());
  std::vector<char> buffer;
  buffer.reserve(kHeaderSize + level.size() * record_bytes);
  buffer.insert(buffer.end(), kMagic.begin(), kMagic.end());
  buffer.push_back(static_cast<char>(kLevelFileVersion));
  buffer.push_back(static_cast<char>(level.n()));
  const std::uint64_t count = level.size();
  for (int i = 0; i < 8; ++i) {
    buffer.push_back(static_cast<char>((count >> (8 * i)) & 0xFF));
  }
  for (bits::Word w : level.systems()) {
    for (std::size_t i = 0; i < record_bytes; ++i) {
      buffer.push_back(static_cast<char>((w >> (8 * i)) & 0xFF));
    }
  }

  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorCode::kIo, "cannot open " + tmp.string() + " for writing");
    }
    out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
    if (!out) throw Error(ErrorCode::kIo, "short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot rename into " + path.string());
  }
}

LevelCache ReadLevelFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::vector<unsigned char> data((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (data.size() < kHeaderSize ||
      std::memcmp(data.data(), kMagic.data(), kMagic.size()) != 0) {
    throw Error(ErrorCode::kParse, path.string() + ": bad level-cache magic");
  }
  if (data[4] != kLevelFileVersion) {
    throw Error(ErrorCode::kParse, path.string() + ": unsupported version " +
                                       std::to_string(data[4]));
  }
  const int n = data[5];
  if (n > LevelCache::kMaxLevel) {
    throw Error(ErrorCode::kParse, path.string() + ": level out of range");
  }
  std::uint64_t count = 0;
  for (int i = 0; i < 8; ++i) count |= std::uint64_t{data[6 + i]} << (8 * i);
  const std::size_t record_bytes = RecordBytes(n);
  if (count > (data.size() - kHeaderSize) / record_bytes ||
      data.size() != kHeaderSize + count * record_bytes) {
    throw Error(ErrorCode::kParse,
                path.string() + ": length does not match record count");
  }
  std::vector<bits::Word> systems(count);
  const unsigned char* p = data.data() + kHeaderSize;
  for (std::uint64_t r = 0; r < count; ++r, p += record_bytes) {
    bits::Word w = 0;
    for (std::size_t i = 0; i < record_bytes; ++i) {
      w |= bits::Word{p[i]} << (8 * i);
    }
    systems[r] = w;
  }
  try {
    return LevelCache(n, std::move(systems));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
}

LevelStore::LevelStore(std::optional<std::filesystem::path> dir,
                       EnumerateOptions options)
    : dir_(std::move(dir)), options_(options) {}

const LevelCache& LevelStore::Level(int n) {
  if (auto it = levels_.find(n); it != levels_.end()) return it->second;
  if (n < 0 || n > kMaxListedLevel) {
    throw Error(ErrorCode::kResourceLimit,
                "level " + std::to_string(n) + " cannot be held as a list");
  }
  if (n == 0) return levels_.emplace(0, LevelCache::Base()).first->second;

  if (dir_) {
    const auto path = *dir_ / LevelFileName(n);
    std::error_code ec;
    if (std::filesystem::exists(path, ec)) {
      try {
        LevelCache level = ReadLevelFile(path);
        if (level.n() == n) {
          ValidateLevel(level);
          ++loaded_;
          return levels_.emplace(n, std::move(level)).first->second;
        }
      } catch (const Error&) {
        // Unreadable or invalid: fall through and recompute.
      }
    }
  }

  const LevelCache& prev = Level(n - 1);
  LevelCache level = EnumerateLevel(prev, options_);
  ++computed_;
  if (dir_) {
    std::error_code ec;
    std::filesystem::create_directories(*dir_, ec);
    if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir_->string());
    WriteLevelFile(*dir_ / LevelFileName(n), level);
  }
  return levels_.emplace(n, std::move(level)).first->second;
}

}  // namespace dm
