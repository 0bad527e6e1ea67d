// Copyright 2026 The ratedyn Authors.
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

#ifndef RATEDYN_SCENARIO_HPP
#define RATEDYN_SCENARIO_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratedyn/config.hpp"
#include "ratedyn/traces.hpp"

/// Scenario runner behind the `ratedyn` command-line tool.
///
/// Output files:
///   votes*.csv      `t,m`
///   rank*.csv       `week,F,S,rank_proxy` (empty rank_proxy = unranked)
///   ensemble*.csv   `t,mean,std,mean_field`
///   <kind>.json     resolved parameters, results and tool version
/// CSV files start with `#` comment lines holding the resolved parameters.
/// Every file is written to a temporary name and renamed into place.
namespace ratedyn {

enum class ScenarioKind {
  kSimulateVotes,
  kSimulateRank,
  kEnsemble,
  kFitLinear,
  kFitLog,
  kFitSuccess,
  kFitInterestingness,
  kSignificance,
  kCompare,
};

enum class OutputFormat { kCsv, kJson };

enum class ExitCode : int {
  kSuccess = 0,
  kInternal = 1,
  kInvalidConfig = 2,
  kUnreadableInput = 3,
  kUnwritableOutput = 4,
};

/// One `--sweep KEY=v1,v2,...` axis; KEY is `section.key`.
struct Sweep {
  std::string key;
  std::vector<std::string> values;
};

/// Parses `section.key=v1,v2,...`. Throws ConfigError on an empty list.
[[nodiscard]] Sweep parse_sweep(std::string_view text);

struct Scenario {
  ScenarioKind kind = ScenarioKind::kSimulateVotes;
  ConfigFile config{};
  std::vector<Sweep> sweeps{};  ///< Cartesian product, first axis slowest
  std::optional<std::filesystem::path> input{};
  std::filesystem::path out_dir = ".";
  std::optional<std::uint64_t> seed{};
  OutputFormat format = OutputFormat::kCsv;
  TraceKind trace_kind = TraceKind::kVote;
  std::string rank_series = "F";  ///< compare: which rank series the trace holds (F or S)
  bool fit_r = false;             ///< compare: fit r per trace before comparing
};

struct ScenarioResult {
  std::vector<std::filesystem::path> files;  ///< in write order
};

/// Resolves and validates every sweep point, then runs them and writes the
/// outputs. Throws ConfigError, InputError or OutputError.
ScenarioResult run_scenario(const Scenario& scenario);

/// Maps an exception thrown by run_scenario to the documented exit status.
[[nodiscard]] ExitCode exit_code_for(const std::exception& error);

[[nodiscard]] std::string_view tool_version();

/// Writes via a temporary file and rename. Throws OutputError.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace ratedyn

#endif  // RATEDYN_SCENARIO_HPP
