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

// ratedyn: scenario runner for the vote, rank and significance models.
//
// Exit status: 0 success, 2 invalid configuration or arguments,
// 3 unreadable input, 4 unwritable output, 1 internal error.

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ratedyn/scenario.hpp"

namespace {

struct CommonOptions {
  std::string config;
  std::string out = ".";
  std::vector<std::string> sweeps;
  std::optional<std::uint64_t> seed;
  std::string format = "csv";
  std::string input;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool needs_input) {
  cmd->add_option("--config", opts.config, "Scenario config file (key = value, [sections])");
  cmd->add_option("--out", opts.out, "Output directory")->capture_default_str();
  cmd->add_option("--sweep", opts.sweeps, "Sweep axis section.key=v1,v2,... (repeatable)")
      ->take_all()
      ->allow_extra_args(false);
  cmd->add_option("--seed", opts.seed, "Override [ensemble] seed");
  cmd->add_option("--format", opts.format, "Trajectory output: csv files or inline json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  auto* input = cmd->add_option("--input", opts.input, "Input data file (CSV)");
  if (needs_input) input->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ratedyn: collective rating dynamics simulator and analysis toolkit"};
  app.set_version_flag("--version", std::string(ratedyn::tool_version()));
  app.require_subcommand(1);

  CommonOptions opts;
  std::string trace_kind = "vote";
  std::string series = "F";
  bool fit_r = false;
  std::map<CLI::App*, ratedyn::ScenarioKind> kinds;

  auto* simulate = app.add_subcommand("simulate", "Integrate a model");
  simulate->require_subcommand(1);
  auto* sim_votes = simulate->add_subcommand("votes", "Mean-field vote trajectory per sweep point");
  auto* sim_rank = simulate->add_subcommand("rank", "Weekly front-page count / network trajectory");
  auto* ens = app.add_subcommand("ensemble", "Monte Carlo ensemble of stochastic vote runs");
  auto* fit = app.add_subcommand("fit", "Least-squares fits on data files");
  fit->require_subcommand(1);
  auto* fit_lin = fit->add_subcommand("linear", "Linear fit of x,y data ([fit] through_origin)");
  auto* fit_lg = fit->add_subcommand("log", "y = alpha log(x) + beta on x,y data ([fit] log_base)");
  auto* fit_succ = fit->add_subcommand("success", "Binned success rate vs network size");
  auto* fit_int = fit->add_subcommand("interestingness", "Fit r per story of a vote trace");
  auto* sig = app.add_subcommand("significance", "Binomial chance probability of friend votes");
  auto* cmp = app.add_subcommand("compare", "Compare traces against the model");

  add_common(sim_votes, opts, false);
  add_common(sim_rank, opts, false);
  add_common(ens, opts, false);
  for (auto* cmd : {fit_lin, fit_lg, fit_succ, fit_int, sig, cmp}) add_common(cmd, opts, true);
  cmp->add_option("--kind", trace_kind, "Trace kind")
      ->check(CLI::IsMember({"vote", "rank"}))
      ->capture_default_str();
  cmp->add_option("--series", series, "Rank series held by the trace")
      ->check(CLI::IsMember({"F", "S"}))
      ->capture_default_str();
  cmp->add_flag("--fit-r", fit_r, "Fit r per vote trace before comparing");

  kinds[sim_votes] = ratedyn::ScenarioKind::kSimulateVotes;
  kinds[sim_rank] = ratedyn::ScenarioKind::kSimulateRank;
  kinds[ens] = ratedyn::ScenarioKind::kEnsemble;
  kinds[fit_lin] = ratedyn::ScenarioKind::kFitLinear;
  kinds[fit_lg] = ratedyn::ScenarioKind::kFitLog;
  kinds[fit_succ] = ratedyn::ScenarioKind::kFitSuccess;
  kinds[fit_int] = ratedyn::ScenarioKind::kFitInterestingness;
  kinds[sig] = ratedyn::ScenarioKind::kSignificance;
  kinds[cmp] = ratedyn::ScenarioKind::kCompare;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ratedyn::ExitCode::kInvalidConfig);
  }

  ratedyn::Scenario scenario;
  for (const auto& [cmd, kind] : kinds) {
    if (cmd->parsed()) scenario.kind = kind;
  }

  try {
    if (!opts.config.empty()) scenario.config = ratedyn::load_config(opts.config);
    for (const auto& s : opts.sweeps) scenario.sweeps.push_back(ratedyn::parse_sweep(s));
    if (!opts.input.empty()) scenario.input = opts.input;
    scenario.out_dir = opts.out;
    scenario.seed = opts.seed;
    scenario.format = opts.format == "json" ? ratedyn::OutputFormat::kJson : ratedyn::OutputFormat::kCsv;
    scenario.trace_kind = trace_kind == "rank" ? ratedyn::TraceKind::kRank : ratedyn::TraceKind::kVote;
    scenario.rank_series = series;
    scenario.fit_r = fit_r;

    const auto result = ratedyn::run_scenario(scenario);
    for (const auto& file : result.files) std::cout << file.string() << "\n";
    return static_cast<int>(ratedyn::ExitCode::kSuccess);
  } catch (const std::exception& e) {
    std::cerr << "ratedyn: " << e.what() << "\n";
    return static_cast<int>(ratedyn::exit_code_for(e));
  }
}
