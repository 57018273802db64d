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

#include "commands.hpp"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dm/construct.hpp"
#include "dm/count.hpp"
#include "dm/encode.hpp"
#include "dm/error.hpp"
#include "dm/io.hpp"
#include "dm/level_store.hpp"
#include "dm/set_system.hpp"

namespace dmtool {
namespace {

using nlohmann::json;

std::string SetNotation(dm::Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; m >> i; ++i) {
    if ((m >> i) & 1u) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(i + 1);
    }
  }
  return out + "}";
}

std::string FixedDouble(double v, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

int ExitFor(const dm::Error& e) {
  switch (e.code()) {
    case dm::ErrorCode::kNotDeltaMatroid:
    case dm::ErrorCode::kDegreeViolation:
    case dm::ErrorCode::kStabilityViolation:
      return kExitViolation;
    case dm::ErrorCode::kResourceLimit:
    case dm::ErrorCode::kCacheUnavailable:
      return kExitResourceLimit;
    default:
      return kExitUsage;
  }
}

// Runs `body`, turning library errors into diagnostics and exit codes.
template <typename F>
int Guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const dm::Error& e) {
    err << "error [" << dm::ErrorCodeName(e.code()) << "]: " << e.what() << '\n';
    return ExitFor(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

void Emit(const std::string& text, const std::optional<std::filesystem::path>& path,
          std::ostream& out) {
  if (path) {
    dm::WriteTextFile(*path, text);
  } else {
    out << text;
  }
}

dm::LevelStore MakeStore(const Config& config) {
  return dm::LevelStore(config.cache_dir, dm::EnumerateOptions{config.threads});
}

}  // namespace

Config ResolveConfig(Config config, const std::optional<std::string>& cache_flag) {
  if (cache_flag) {
    config.cache_dir = *cache_flag;
  } else if (const char* env = std::getenv("DM_CACHE_DIR"); env && *env) {
    config.cache_dir = env;
  }
  if (config.threads < 1) {
    throw dm::Error(dm::ErrorCode::kPrecondition, "threads must be at least 1");
  }
  if (config.max_n < 1 || config.max_n > dm::kMaxGroundSize) {
    throw dm::Error(dm::ErrorCode::kPrecondition, "max n must lie in [1, 16]");
  }
  return config;
}

int CmdCheck(const Config& config, const std::filesystem::path& path,
             std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const dm::SetSystem s = dm::SetSystemFromJson(dm::ReadJsonFile(path));
    json report{{"n", s.n()}, {"feasible_count", s.size()}, {"proper", s.proper()}};
    std::optional<dm::ExchangeWitness> witness;
    bool is_dm = false;
    if (s.proper()) {
      witness = dm::CheckSymmetricExchange(s);
      is_dm = !witness.has_value();
      report["even"] = dm::IsEven(s);
    } else {
      report["even"] = nullptr;
    }
    report["delta_matroid"] = is_dm;
    if (witness) {
      report["witness"] = {{"x", witness->x}, {"y", witness->y}, {"e", witness->e}};
    } else {
      report["witness"] = nullptr;
    }

    if (config.format == OutputFormat::kJson) {
      out << report.dump(2) << '\n';
    } else {
      out << "n: " << s.n() << '\n'
          << "feasible sets: " << s.size() << '\n'
          << "delta-matroid: " << (is_dm ? "yes" : "no") << '\n';
      if (!s.proper()) {
        out << "even: n/a (improper system)\n";
      } else {
        out << "even: " << (report["even"].get<bool>() ? "yes" : "no") << '\n';
      }
      if (witness) {
        out << "witness: X=" << SetNotation(witness->x)
            << " Y=" << SetNotation(witness->y) << " e=" << witness->e << '\n';
      }
    }
    return is_dm ? kExitOk : kExitViolation;
  });
}

int CmdCount(const Config& config, const CountFlags& flags, std::ostream& out,
             std::ostream& err) {
  return Guarded(err, [&] {
    dm::LevelStore store = MakeStore(config);
    const std::vector<dm::CountReport> rows = dm::CountReports(
        store, config.max_n, dm::CountOptions{flags.with_even, flags.allow_n6});
    if (config.format == OutputFormat::kJson) {
      json table = json::array();
      for (const auto& r : rows) {
        json row{{"n", r.n}, {"d_n", r.d_n}, {"gamma", FixedDouble(r.gamma, 6)}};
        if (flags.with_even) row["e_n"] = r.e_n ? json(*r.e_n) : json(nullptr);
        table.push_back(row);
      }
      out << json{{"rows", table}}.dump(2) << '\n';
    } else {
      out << std::left << std::setw(4) << "n" << std::setw(16) << "d_n"
          << std::setw(10) << "gamma";
      if (flags.with_even) out << "e_n";
      out << '\n';
      for (const auto& r : rows) {
        out << std::setw(4) << r.n << std::setw(16) << r.d_n << std::setw(10)
            << FixedDouble(r.gamma, 6);
        if (flags.with_even) out << (r.e_n ? std::to_string(*r.e_n) : "-");
        out << '\n';
      }
    }
    err << "levels loaded: " << store.loaded_levels()
        << ", computed: " << store.computed_levels() << '\n';
    return kExitOk;
  });
}

int CmdCountEven(const Config& config, int n, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    dm::LevelStore store = MakeStore(config);
    const dm::EvenCount count = dm::CountEvenAt(store, n);
    const double lower = dm::EvenLowerBound(n);
    const double loglog = count.total > 1
                              ? std::log2(std::log2(static_cast<double>(count.total)))
                              : 0.0;
    if (config.format == OutputFormat::kJson) {
      out << json{{"n", n},
                  {"e_n", count.total},
                  {"all_even", count.all_even},
                  {"log2_log2_e_n", FixedDouble(loglog, 6)},
                  {"lower_bound", FixedDouble(lower, 6)}}
                 .dump(2)
          << '\n';
    } else {
      out << "n: " << n << '\n'
          << "e_n: " << count.total << '\n'
          << "all-even: " << count.all_even << '\n'
          << "log2 log2 e_n: " << FixedDouble(loglog, 6) << '\n'
          << "n - 1 - log2 n: " << FixedDouble(lower, 6) << '\n';
    }
    return kExitOk;
  });
}

int CmdConstruct(const Config& config, const ConstructArgs& args,
                 std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    if (args.kind == "gs-stable") {
      Emit(dm::VertexListing(dm::GrahamSloaneStableSet(args.n, args.r)),
           args.out_path, out);
      return kExitOk;
    }
    std::mt19937_64 rng(config.seed);
    dm::SetSystem system(0);
    if (args.kind == "stable-complement") {
      const dm::VertexSet v = dm::RandomStableSet(args.n, rng);
      system = dm::DeltaMatroidFromComplement(v, dm::ComplementMode::kStable);
    } else if (args.kind == "cut-sample") {
      system = dm::SampleCutConstruction(args.n, args.cut, config.seed).system;
    } else if (args.kind == "stacked-even") {
      system = dm::StackedEvenDeltaMatroid(args.n, dm::RandomStackedLayers(args.n, rng));
    } else {
      err << "error: unknown construction '" << args.kind << "'\n";
      return kExitUsage;
    }
    Emit(dm::SetSystemToJson(system).dump() + "\n", args.out_path, out);
    return kExitOk;
  });
}

int CmdEncode(const Config& /*config*/, const std::filesystem::path& in,
              const std::optional<std::filesystem::path>& out_path,
              std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const dm::SetSystem d = dm::SetSystemFromJson(dm::ReadJsonFile(in));
    const dm::EncodingRecord record = dm::EncodeEvenDeltaMatroid(d);
    Emit(dm::RecordToJson(record).dump() + "\n", out_path, out);
    return kExitOk;
  });
}

int CmdDecode(const Config& /*config*/, const std::filesystem::path& in,
              std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const dm::EncodingRecord record = dm::RecordFromJson(dm::ReadJsonFile(in));
    out << dm::SetSystemToJson(dm::ReconstructEvenDeltaMatroid(record)).dump() << '\n';
    return kExitOk;
  });
}

int CmdRoundtrip(const Config& config, const std::filesystem::path& in,
                 std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const dm::SetSystem d = dm::SetSystemFromJson(dm::ReadJsonFile(in));
    const dm::EncodingRecord record = dm::EncodeEvenDeltaMatroid(d);
    // Through the serialized form, as a stored record would be read back.
    const dm::EncodingRecord reread = dm::RecordFromJson(
        dm::ParseJsonText(dm::RecordToJson(record).dump(), "record"));
    const std::vector<dm::Mask> expected = dm::InfeasibleEvenSets(d);
    const std::vector<dm::Mask> decoded = dm::DecodeEvenDeltaMatroid(reread, d.n());
    const bool ok = decoded == expected && dm::ReconstructEvenDeltaMatroid(reread) == d;

    const int n = d.n();
    const std::size_t vertices = std::size_t{1} << (n - 1);
    const int degree = n * (n - 1) / 2;
    const std::int64_t lambda = -dm::SmallestEigenvalue(n);
    const std::size_t s_bound = dm::ContainerSizeBound(vertices, degree, lambda);
    const double a_bound = record.alpha.value() * static_cast<double>(vertices);
    const std::size_t a_size =
        dm::KwReconstructA(dm::RnComponent(n, dm::Parity::kEven), record.s,
                           record.alpha)
            .size();

    if (config.format == OutputFormat::kJson) {
      out << json{{"n", n},
                  {"reproduced", ok},
                  {"infeasible_even", expected.size()},
                  {"s", record.s.size()},
                  {"s_bound", s_bound},
                  {"a", a_size},
                  {"a_bound", FixedDouble(a_bound, 3)},
                  {"residual", record.residual.size()},
                  {"alpha", record.alpha.ToString()},
                  {"sigma_prime", record.sigma_prime.ToString()}}
                 .dump(2)
          << '\n';
    } else {
      out << "n: " << n << '\n'
          << "reproduced: " << (ok ? "yes" : "no") << '\n'
          << "infeasible even sets: " << expected.size() << '\n'
          << "|S|: " << record.s.size() << " (bound " << s_bound << ")\n"
          << "|A|: " << a_size << " (bound " << FixedDouble(a_bound, 3) << ")\n"
          << "|residual|: " << record.residual.size() << '\n'
          << "alpha: " << record.alpha.ToString() << '\n'
          << "sigma': " << record.sigma_prime.ToString() << '\n';
    }
    return ok ? kExitOk : kExitViolation;
  });
}

int CmdSpectrum(const Config& config, int n, std::ostream& out, std::ostream& err) {
  return Guarded(err, [&] {
    const std::vector<dm::SpectrumEntry> full = dm::RnSpectrum(n);
    const std::vector<dm::SpectrumEntry> component = dm::RnComponentSpectrum(n);
    const std::int64_t smallest = dm::SmallestEigenvalue(n);
    std::optional<bool> identity;
    if (n <= 8) identity = dm::RnMatrixIdentity(n);

    if (config.format == OutputFormat::kJson) {
      json rows = json::array();
      for (std::size_t i = 0; i < full.size(); ++i) {
        rows.push_back({{"eigenvalue", full[i].value},
                        {"multiplicity", full[i].multiplicity},
                        {"component_multiplicity", component[i].multiplicity}});
      }
      out << json{{"n", n},
                  {"spectrum", rows},
                  {"smallest", smallest},
                  {"matrix_identity", identity ? json(*identity) : json(nullptr)}}
                 .dump(2)
          << '\n';
    } else {
      out << std::left << std::setw(12) << "eigenvalue" << std::setw(14)
          << "multiplicity" << "component" << '\n';
      for (std::size_t i = 0; i < full.size(); ++i) {
        out << std::setw(12) << full[i].value << std::setw(14) << full[i].multiplicity
            << component[i].multiplicity << '\n';
      }
      out << "smallest: " << smallest << '\n';
      out << "matrix identity: "
          << (identity ? (*identity ? "holds" : "fails") : "skipped (n > 8)") << '\n';
    }
    return identity.value_or(true) ? kExitOk : kExitViolation;
  });
}

int CmdBound(const Config& config, int n, bool compare, std::ostream& out,
             std::ostream& err) {
  return Guarded(err, [&] {
    const dm::BoundReport report = dm::BoundCalculator(n);
    std::optional<std::uint64_t> e_n;
    std::optional<bool> dominates;
    if (compare) {
      dm::LevelStore store = MakeStore(config);
      e_n = dm::CountEvenAt(store, n).total;
      dominates = dm::BoundDominates(*e_n, report.log_e_n_bound);
    }
    const bool ok = report.bell_within_power && report.sigma_prime_in_range &&
                    dominates.value_or(true);
    if (config.format == OutputFormat::kJson) {
      json j{{"n", n},
             {"alpha", report.alpha.ToString()},
             {"sigma", FixedDouble(report.sigma, 9)},
             {"sigma_prime", report.sigma_prime.ToString()},
             {"bell", report.bell.get_str()},
             {"bell_within_power", report.bell_within_power},
             {"sigma_prime_in_range", report.sigma_prime_in_range},
             {"log2_e_n_bound", FixedDouble(report.log_e_n_bound, 6)}};
      if (compare) {
        j["e_n"] = *e_n;
        j["bound_dominates"] = *dominates;
      }
      out << j.dump(2) << '\n';
    } else {
      out << "n: " << n << '\n'
          << "alpha: " << report.alpha.ToString() << '\n'
          << "sigma: " << FixedDouble(report.sigma, 9) << '\n'
          << "sigma': " << report.sigma_prime.ToString() << '\n'
          << "B(n+1): " << report.bell.get_str() << '\n'
          << "B(n+1) <= (n+1)^(n+1): " << (report.bell_within_power ? "yes" : "no")
          << '\n'
          << "sigma <= sigma' <= sigma + 2^-(n-2): "
          << (report.sigma_prime_in_range ? "yes" : "no") << '\n'
          << "log2 e_n bound: " << FixedDouble(report.log_e_n_bound, 6) << '\n';
      if (compare) {
        out << "e_n: " << *e_n << '\n'
            << "bound dominates: " << (*dominates ? "yes" : "no") << '\n';
      }
    }
    return ok ? kExitOk : kExitViolation;
  });
}

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"dmtool: delta-matroid counting, checking, construction and encoding"};
  app.require_subcommand(1);
  // Global options may also follow the subcommand name.
  app.fallthrough();

  Config config;
  std::optional<std::string> cache_flag;
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cache-dir", cache_flag, "Level cache directory (else DM_CACHE_DIR)");
  app.add_option("--threads", config.threads, "Enumeration worker threads");
  app.add_option("--seed", config.seed, "Random seed");

  std::string path;
  auto* check = app.add_subcommand("check", "Check the symmetric exchange axiom");
  check->add_option("path", path, "Set-system JSON file")->required();

  CountFlags count_flags;
  auto* count = app.add_subcommand("count", "Tabulate d_n and Gamma_n");
  count->add_option("--max-n", config.max_n, "Largest n")->required();
  count->add_flag("--with-even", count_flags.with_even, "Add the e_n column");
  count->add_flag("--allow-n6", count_flags.allow_n6, "Admit n = 6 via twist classes");

  int n = 0;
  auto* count_even = app.add_subcommand("count-even", "Count even delta-matroids");
  count_even->add_option("--n", n, "Ground-set size")->required();

  ConstructArgs construct_args;
  std::optional<std::string> construct_out;
  auto* construct = app.add_subcommand("construct", "Build a delta-matroid family member");
  construct->add_option("kind", construct_args.kind, "Construction")
      ->required()
      ->check(CLI::IsMember({"stable-complement", "cut-sample", "stacked-even", "gs-stable"}));
  construct->add_option("--n", construct_args.n, "Ground-set size")->required();
  construct->add_option("--r", construct_args.r, "Rank (gs-stable)");
  construct->add_option("--cut", construct_args.cut, "Cut element (cut-sample)");
  construct->add_option("--out", construct_out, "Output file");

  std::optional<std::string> encode_out;
  auto* encode = app.add_subcommand("encode", "Encode an even delta-matroid");
  encode->add_option("--in", path, "Set-system JSON file")->required();
  encode->add_option("--out", encode_out, "Record output file");

  auto* decode = app.add_subcommand("decode", "Decode an encoding record");
  decode->add_option("--in", path, "Record JSON file")->required();

  auto* roundtrip = app.add_subcommand("roundtrip", "Encode, decode and compare");
  roundtrip->add_option("path", path, "Set-system JSON file")->required();

  auto* spectrum = app.add_subcommand("spectrum", "Spectrum of R_n");
  spectrum->add_option("--n", n, "Ground-set size")->required();

  bool compare = false;
  auto* bound = app.add_subcommand("bound", "Upper bound on log2 e_n");
  bound->add_option("--n", n, "Ground-set size")->required();
  bound->add_flag("--compare", compare, "Compare with the exact e_n (n <= 5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, help);
    (e.get_exit_code() == 0 ? out : err) << help.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  config.format = format == "json" ? OutputFormat::kJson : OutputFormat::kText;
  try {
    config = ResolveConfig(config, cache_flag);
  } catch (const dm::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (*check) return CmdCheck(config, path, out, err);
  if (*count) return CmdCount(config, count_flags, out, err);
  if (*count_even) return CmdCountEven(config, n, out, err);
  if (*construct) {
    if (construct_out) construct_args.out_path = *construct_out;
    return CmdConstruct(config, construct_args, out, err);
  }
  if (*encode) {
    std::optional<std::filesystem::path> out_path;
    if (encode_out) out_path = *encode_out;
    return CmdEncode(config, path, out_path, out, err);
  }
  if (*decode) return CmdDecode(config, path, out, err);
  if (*roundtrip) return CmdRoundtrip(config, path, out, err);
  if (*spectrum) return CmdSpectrum(config, n, out, err);
  if (*bound) return CmdBound(config, n, compare, out, err);
  return kExitUsage;
}

}  // namespace dmtool
