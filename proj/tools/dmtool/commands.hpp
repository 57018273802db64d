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

#ifndef DMTOOL_COMMANDS_HPP_
#define DMTOOL_COMMANDS_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace dmtool {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitUsage = 2,
  kExitResourceLimit = 3,
};

enum class OutputFormat { kText, kJson };

struct Config {
  std::filesystem::path cache_dir = ".dm-cache";
  int max_n = 5;
  int threads = 1;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::kText;
};

// Resolves the cache directory: explicit flag, then DM_CACHE_DIR, then the
// default. Throws on an invalid configuration.
Config ResolveConfig(Config config, const std::optional<std::string>& cache_flag);

// Every command writes its report to `out`, diagnostics to `err`, and
// returns a process exit code.
int CmdCheck(const Config& config, const std::filesystem::path& path,
             std::ostream& out, std::ostream& err);

struct CountFlags {
  bool with_even = false;
  bool allow_n6 = false;
};
int CmdCount(const Config& config, const CountFlags& flags, std::ostream& out,
             std::ostream& err);

int CmdCountEven(const Config& config, int n, std::ostream& out, std::ostream& err);

struct ConstructArgs {
  std::string kind;  // stable-complement | cut-sample | stacked-even | gs-stable
  int n = 0;
  int r = 0;
  int cut = 1;
  std::optional<std::filesystem::path> out_path;
};
int CmdConstruct(const Config& config, const ConstructArgs& args,
                 std::ostream& out, std::ostream& err);

int CmdEncode(const Config& config, const std::filesystem::path& in,
              const std::optional<std::filesystem::path>& out_path,
              std::ostream& out, std::ostream& err);
int CmdDecode(const Config& config, const std::filesystem::path& in,
              std::ostream& out, std::ostream& err);
int CmdRoundtrip(const Config& config, const std::filesystem::path& in,
                 std::ostream& out, std::ostream& err);
int CmdSpectrum(const Config& config, int n, std::ostream& out, std::ostream& err);
int CmdBound(const Config& config, int n, bool compare, std::ostream& out,
             std::ostream& err);

// Parses argv with CLI11 and dispatches.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dmtool

#endif  // DMTOOL_COMMANDS_HPP_
