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

#include "ratedyn/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ratedyn/fitting.hpp"
#include "ratedyn/rank_dynamics.hpp"
#include "ratedyn/stochastic.hpp"
#include "ratedyn/vote_dynamics.hpp"

#ifndef RATEDYN_VERSION
#define RATEDYN_VERSION "0.0.0"
#endif

namespace ratedyn {

namespace {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

const char* kind_name(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kSimulateVotes: return "simulate votes";
    case ScenarioKind::kSimulateRank: return "simulate rank";
    case ScenarioKind::kEnsemble: return "ensemble";
    case ScenarioKind::kFitLinear: return "fit linear";
    case ScenarioKind::kFitLog: return "fit log";
    case ScenarioKind::kFitSuccess: return "fit success";
    case ScenarioKind::kFitInterestingness: return "fit interestingness";
    case ScenarioKind::kSignificance: return "significance";
    case ScenarioKind::kCompare: return "compare";
  }
  return "unknown";
}

const char* file_stem(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::kSimulateVotes: return "votes";
    case ScenarioKind::kSimulateRank: return "rank";
    case ScenarioKind::kEnsemble: return "ensemble";
    case ScenarioKind::kFitLinear: return "fit_linear";
    case ScenarioKind::kFitLog: return "fit_log";
    case ScenarioKind::kFitSuccess: return "fit_success";
    case ScenarioKind::kFitInterestingness: return "fit_interestingness";
    case ScenarioKind::kSignificance: return "significance";
    case ScenarioKind::kCompare: return "compare";
  }
  return "out";
}

ordered_json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

ordered_json json_optional(const std::optional<double>& v) {
  return v ? json_number(*v) : ordered_json(nullptr);
}

ordered_json params_json(const ResolvedConfig& config) {
  ordered_json out = ordered_json::object();
  for (const auto& [dotted, value] : config_entries(config)) {
    const auto dot = dotted.find('.');
    auto& section = out[dotted.substr(0, dot)];
    const auto key = dotted.substr(dot + 1);
    double number = 0.0;
    const auto* end = value.data() + value.size();
    if (value == "true" || value == "false") {
      section[key] = value == "true";
    } else if (auto [ptr, ec] = std::from_chars(value.data(), end, number);
               ec == std::errc{} && ptr == end) {
      section[key] = number;
    } else {
      section[key] = value;
    }
  }
  return out;
}

std::string csv_preamble(ScenarioKind kind, const ResolvedConfig& config) {
  std::string out = "# ratedyn " + std::string(tool_version()) + " " + kind_name(kind) + "\n";
  for (const auto& [dotted, value] : config_entries(config)) out += "# " + dotted + " = " + value + "\n";
  return out;
}

struct SweepPoint {
  std::vector<std::pair<std::string, std::string>> assignments;
  ResolvedConfig config;

  [[nodiscard]] std::string label() const {
    std::string out;
    for (const auto& [key, value] : assignments) {
      if (!out.empty()) out += "_";
      out += key.substr(key.find('.') + 1) + "-" + value;
    }
    return out;
  }
  [[nodiscard]] ordered_json sweep_json() const {
    ordered_json out = ordered_json::object();
    for (const auto& [key, value] : assignments) out[key] = value;
    return out;
  }
};

std::vector<SweepPoint> expand_sweeps(const Scenario& scenario) {
  std::set<std::string> seen;
  for (const auto& sweep : scenario.sweeps) {
    if (sweep.values.empty()) throw ConfigError("--sweep " + sweep.key + ": empty value list");
    if (!seen.insert(sweep.key).second) throw ConfigError("--sweep " + sweep.key + ": swept twice");
  }

  std::vector<SweepPoint> points;
  std::vector<std::size_t> index(scenario.sweeps.size(), 0);
  while (true) {
    ConfigFile config = scenario.config;
    SweepPoint point;
    for (std::size_t axis = 0; axis < scenario.sweeps.size(); ++axis) {
      const auto& sweep = scenario.sweeps[axis];
      set_config_value(config, sweep.key, sweep.values[index[axis]]);
      point.assignments.emplace_back(sweep.key, sweep.values[index[axis]]);
    }
    if (scenario.seed) set_config_value(config, "ensemble.seed", std::to_string(*scenario.seed));
    try {
      point.config = resolve_config(config);
    } catch (const ConfigError& e) {
      if (point.assignments.empty()) throw;
      throw ConfigError("sweep point " + point.label() + ": " + e.what());
    }
    points.push_back(std::move(point));

    // Odometer increment, last axis fastest.
    std::size_t axis = scenario.sweeps.size();
    while (axis > 0) {
      --axis;
      if (++index[axis] < scenario.sweeps[axis].values.size()) break;
      index[axis] = 0;
      if (axis == 0) return points;
    }
    if (scenario.sweeps.empty()) return points;
  }
}

fs::path output_path(const Scenario& scenario, const SweepPoint& point, const char* extension) {
  std::string name = file_stem(scenario.kind);
  if (const auto label = point.label(); !label.empty()) name += "_" + label;
  return scenario.out_dir / (name + extension);
}

ordered_json document(const Scenario& scenario) {
  ordered_json doc;
  doc["tool"] = "ratedyn";
  doc["version"] = std::string(tool_version());
  doc["scenario"] = kind_name(scenario.kind);
  return doc;
}

// Numeric CSV with an exact header; errors carry line numbers.
std::vector<std::vector<double>> read_numeric_csv(const fs::path& path,
                                                  const std::vector<std::string>& columns) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read input file " + path.string());
  std::string expected;
  for (const auto& c : columns) expected += (expected.empty() ? "" : ",") + c;

  std::vector<std::vector<double>> rows;
  std::string raw;
  int line_no = 0;
  bool header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (!header) {
      if (line != expected) throw TraceError(line_no, "expected header '" + expected + "'", path.string());
      header = true;
      continue;
    }
    if (line.empty()) continue;
    std::vector<double> row;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      const auto field = trim(rest.substr(0, comma));
      double value = 0.0;
      const auto* end = field.data() + field.size();
      const auto [ptr, ec] = std::from_chars(field.data(), end, value);
      if (ec != std::errc{} || ptr != end || !std::isfinite(value))
        throw TraceError(line_no, "'" + std::string(field) + "' is not a number", path.string());
      row.push_back(value);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (row.size() != columns.size())
      throw TraceError(line_no, "expected " + std::to_string(columns.size()) + " fields", path.string());
    rows.push_back(std::move(row));
  }
  if (!header) throw TraceError(1, "empty input file", path.string());
  if (rows.empty()) throw TraceError(line_no, "no data rows", path.string());
  return rows;
}

const fs::path& require_input(const Scenario& scenario) {
  if (!scenario.input) throw ConfigError(std::string(kind_name(scenario.kind)) + ": --input is required");
  return *scenario.input;
}

std::vector<Point> read_points(const fs::path& path) {
  std::vector<Point> points;
  for (const auto& row : read_numeric_csv(path, {"x", "y"})) points.push_back({row[0], row[1]});
  return points;
}

// Fits and statistics on user-supplied data: a failed precondition is an
// input problem.
template <typename F>
auto on_input(F&& f) {
  try {
    return f();
  } catch (const ValidationError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

class Runner {
 public:
  explicit Runner(const Scenario& scenario) : scenario_(scenario) {}

  ScenarioResult run() {
    const auto points = expand_sweeps(scenario_);
    if (scenario_.input && !fs::exists(*scenario_.input))
      throw InputError("input file not found: " + scenario_.input->string());
    std::error_code ec;
    fs::create_directories(scenario_.out_dir, ec);
    if (ec || !fs::is_directory(scenario_.out_dir))
      throw OutputError("cannot create output directory " + scenario_.out_dir.string());

    ordered_json doc = document(scenario_);
    ordered_json results = ordered_json::array();
    for (const auto& point : points) {
      ordered_json entry;
      if (!point.assignments.empty()) entry["sweep"] = point.sweep_json();
      entry["params"] = params_json(point.config);
      entry["result"] = run_point(point);
      results.push_back(std::move(entry));
    }
    doc["points"] = std::move(results);
    emit(scenario_.out_dir / (std::string(file_stem(scenario_.kind)) + ".json"), doc.dump(2) + "\n");
    return std::move(result_);
  }

 private:
  void emit(const fs::path& path, std::string_view content) {
    write_file_atomic(path, content);
    result_.files.push_back(path);
  }

  bool csv() const { return scenario_.format == OutputFormat::kCsv; }

  ordered_json run_point(const SweepPoint& point) {
    switch (scenario_.kind) {
      case ScenarioKind::kSimulateVotes: return votes(point);
      case ScenarioKind::kSimulateRank: return rank(point);
      case ScenarioKind::kEnsemble: return run_ensemble(point);
      case ScenarioKind::kFitLinear: return fit_linear_points(point);
      case ScenarioKind::kFitLog: return fit_log_points(point);
      case ScenarioKind::kFitSuccess: return fit_success(point);
      case ScenarioKind::kFitInterestingness: return fit_r(point);
      case ScenarioKind::kSignificance: return significance(point);
      case ScenarioKind::kCompare: return compare(point);
    }
    return nullptr;
  }

  ordered_json votes(const SweepPoint& point) {
    const auto& c = point.config;
    const auto traj = integrate_votes(c.story, c.vote, c.policy, c.horizon);
    ordered_json out;
    out["threshold"] = promotion_threshold_for(c.policy, c.story);
    out["promoted"] = traj.promoted();
    out["promotion_time"] = json_optional(traj.promotion_time);
    out["final_votes"] = traj.final_votes();
    out["saturation_time"] = json_optional(saturation_time(traj));
    out["analytic_upcoming_saturation"] = analytic_upcoming_saturation(c.story.interestingness_r, c.vote);
    if (csv()) {
      std::string text = csv_preamble(scenario_.kind, c) + "t,m\n";
      for (std::size_t i = 0; i < traj.times.size(); ++i)
        text += format_double(traj.times[i]) + "," + format_double(traj.votes[i]) + "\n";
      const auto path = output_path(scenario_, point, ".csv");
      emit(path, text);
      out["trajectory_file"] = path.filename().string();
    } else {
      out["t"] = traj.times;
      out["m"] = traj.votes;
    }
    return out;
  }

  ordered_json rank(const SweepPoint& point) {
    const auto& c = point.config;
    const std::vector<double> schedule =
        c.m_schedule.empty() ? std::vector<double>{c.user.submission_rate_M} : c.m_schedule;
    const auto traj = integrate_rank(c.user, c.weeks, schedule, c.rank, c.kappa);
    ordered_json out;
    out["final_F"] = traj.F.back();
    out["final_S"] = traj.S.back();
    out["final_rank_proxy"] = json_optional(traj.rank_proxy.back());
    if (csv()) {
      std::string text = csv_preamble(scenario_.kind, c) + "week,F,S,rank_proxy\n";
      for (std::size_t i = 0; i < traj.weeks.size(); ++i) {
        text += std::to_string(traj.weeks[i]) + "," + format_double(traj.F[i]) + "," +
                format_double(traj.S[i]) + "," +
                (traj.rank_proxy[i] ? format_double(*traj.rank_proxy[i]) : std::string()) + "\n";
      }
      const auto path = output_path(scenario_, point, ".csv");
      emit(path, text);
      out["trajectory_file"] = path.filename().string();
    } else {
      out["week"] = traj.weeks;
      out["F"] = traj.F;
      out["S"] = traj.S;
      ordered_json proxy = ordered_json::array();
      for (const auto& r : traj.rank_proxy) proxy.push_back(json_optional(r));
      out["rank_proxy"] = std::move(proxy);
    }
    return out;
  }

  ordered_json run_ensemble(const SweepPoint& point) {
    const auto& c = point.config;
    StochasticRunConfig config{c.story, c.vote, c.policy, c.horizon, c.seed, c.runs, c.arrivals};
    const auto summary = ensemble(config, c.threads);
    const auto mean_field = integrate_votes(c.story, c.vote, c.policy, c.horizon);

    ordered_json out;
    out["runs"] = summary.runs;
    out["promoted_runs"] = summary.promoted_runs;
    out["promotion_probability"] = summary.promotion_probability;
    if (summary.promotion_time_quantiles) {
      const auto& q = *summary.promotion_time_quantiles;
      out["promotion_time_quantiles"] = {{"q10", q.q10}, {"q50", q.q50}, {"q90", q.q90}};
    } else {
      out["promotion_time_quantiles"] = nullptr;
    }
    out["final_mean"] = summary.final_mean();
    out["final_std_error"] = summary.final_std_error();
    out["mean_field_final"] = mean_field.final_votes();
    out["mean_field_promotion_time"] = json_optional(mean_field.promotion_time);
    if (csv()) {
      std::string text = csv_preamble(scenario_.kind, c) + "t,mean,std,mean_field\n";
      for (std::size_t i = 0; i < summary.times.size(); ++i) {
        text += format_double(summary.times[i]) + "," + format_double(summary.mean_votes[i]) + "," +
                format_double(summary.std_votes[i]) + "," + format_double(mean_field.votes[i]) + "\n";
      }
      const auto path = output_path(scenario_, point, ".csv");
      emit(path, text);
      out["trajectory_file"] = path.filename().string();
    } else {
      out["t"] = summary.times;
      out["mean"] = summary.mean_votes;
      out["std"] = summary.std_votes;
      out["mean_field"] = mean_field.votes;
    }
    return out;
  }

  ordered_json fit_linear_points(const SweepPoint& point) {
    const auto points = read_points(require_input(scenario_));
    const auto fit = on_input([&] { return fit_linear(points, point.config.fit.through_origin); });
    return {{"slope", fit.slope},
            {"intercept", fit.intercept},
            {"rss", fit.rss},
            {"count", fit.count},
            {"slope_stderr", fit.slope_stderr},
            {"through_origin", point.config.fit.through_origin}};
  }

  ordered_json fit_log_points(const SweepPoint& point) {
    const auto points = read_points(require_input(scenario_));
    const auto fit = on_input([&] { return fit_log(points, point.config.fit.log_base); });
    return {{"alpha", fit.alpha},
            {"beta", fit.beta},
            {"log_base", fit.log_base},
            {"rss", fit.rss},
            {"count", fit.count}};
  }

  ordered_json fit_success(const SweepPoint& point) {
    const auto& c = point.config;
    std::vector<UserRecord> users;
    for (const auto& row : read_numeric_csv(require_input(scenario_), {"submissions", "F", "S"}))
      users.push_back({row[0], row[1], row[2]});
    const auto bins = on_input([&] {
      return success_rate_series(users, {c.fit.bins, c.fit.min_submissions});
    });

    ordered_json out;
    ordered_json table = ordered_json::array();
    std::vector<Point> binned;
    for (const auto& b : bins) {
      table.push_back({{"s_low", b.s_low},
                       {"s_high", b.s_high},
                       {"mean_S", b.mean_S},
                       {"mean_success", b.mean_success},
                       {"stderr_success", b.stderr_success},
                       {"count", b.count}});
      binned.push_back({b.mean_S, b.mean_success});
    }
    out["bins"] = std::move(table);
    if (binned.size() >= 2) {
      try {
        const auto fit = fit_linear(binned, c.fit.through_origin);
        out["fit"] = {{"slope", fit.slope}, {"intercept", fit.intercept}, {"rss", fit.rss},
                      {"count", fit.count}, {"through_origin", c.fit.through_origin}};
      } catch (const std::invalid_argument&) {
        out["fit"] = nullptr;
      }
    } else {
      out["fit"] = nullptr;
    }
    if (csv()) {
      std::string text = csv_preamble(scenario_.kind, c) + "s_low,s_high,mean_S,mean_success,stderr,count\n";
      for (const auto& b : bins) {
        text += format_double(b.s_low) + "," + format_double(b.s_high) + "," + format_double(b.mean_S) +
                "," + format_double(b.mean_success) + "," + format_double(b.stderr_success) + "," +
                std::to_string(b.count) + "\n";
      }
      const auto path = output_path(scenario_, point, ".csv");
      emit(path, text);
      out["bins_file"] = path.filename().string();
    }
    return out;
  }

  ordered_json fit_r(const SweepPoint& point) {
    const auto& c = point.config;
    const auto traces = group_traces(ingest_traces(require_input(scenario_), TraceKind::kVote));
    ordered_json out = ordered_json::array();
    for (const auto& [id, samples] : traces) {
      const auto fit = on_input([&] {
        return fit_interestingness(samples, c.story.submitter_network_S, c.vote, c.policy);
      });
      out.push_back({{"id", id}, {"r", fit.r}, {"rss", fit.rss}, {"count", fit.count}});
    }
    return out;
  }

  ordered_json significance(const SweepPoint& point) {
    std::vector<FriendVoteObservation> stories;
    for (const auto& row :
         read_numeric_csv(require_input(scenario_), {"pool_N", "sample_n", "group_K", "overlap_k"})) {
      FriendVoteObservation obs;
      for (double v : row) {
        if (v != std::floor(v)) throw InputError("significance input: counts must be integers");
      }
      obs.pool_N = static_cast<std::int64_t>(row[0]);
      obs.sample_n = static_cast<std::int64_t>(row[1]);
      obs.group_K = static_cast<std::int64_t>(row[2]);
      obs.overlap_k = static_cast<std::int64_t>(row[3]);
      if (const auto violations = check(obs); !violations.empty())
        throw InputError(std::string("significance input: ") + ValidationError(violations).what());
      stories.push_back(obs);
    }

    ordered_json per_story = ordered_json::array();
    std::vector<FriendVoteObservation> with_friends;
    std::string text = csv_preamble(scenario_.kind, point.config) +
                       "pool_N,sample_n,group_K,overlap_k,p_exact,p_tail\n";
    for (const auto& obs : stories) {
      const double exact = chance_probability(obs, ChanceMode::kExact);
      const double tail = chance_probability(obs, ChanceMode::kTailAtLeast);
      per_story.push_back({{"pool_N", obs.pool_N}, {"sample_n", obs.sample_n}, {"group_K", obs.group_K},
                           {"overlap_k", obs.overlap_k}, {"p_exact", exact}, {"p_tail", tail}});
      text += std::to_string(obs.pool_N) + "," + std::to_string(obs.sample_n) + "," +
              std::to_string(obs.group_K) + "," + std::to_string(obs.overlap_k) + "," +
              format_double(exact) + "," + format_double(tail) + "\n";
      if (obs.overlap_k >= 1) with_friends.push_back(obs);
    }

    ordered_json out;
    out["stories"] = std::move(per_story);
    out["mean_exact_all"] = average_chance_probability(stories, ChanceMode::kExact);
    out["mean_tail_all"] = average_chance_probability(stories, ChanceMode::kTailAtLeast);
    if (!with_friends.empty()) {
      out["mean_exact_with_friend_votes"] = average_chance_probability(with_friends, ChanceMode::kExact);
      out["mean_tail_with_friend_votes"] =
          average_chance_probability(with_friends, ChanceMode::kTailAtLeast);
    } else {
      out["mean_exact_with_friend_votes"] = nullptr;
      out["mean_tail_with_friend_votes"] = nullptr;
    }
    if (csv()) {
      const auto path = output_path(scenario_, point, ".csv");
      emit(path, text);
      out["stories_file"] = path.filename().string();
    }
    return out;
  }

  ordered_json compare(const SweepPoint& point) {
    const auto& c = point.config;
    const auto traces = group_traces(ingest_traces(require_input(scenario_), scenario_.trace_kind));
    ordered_json out = ordered_json::array();
    for (const auto& [id, samples] : traces) {
      ordered_json entry;
      entry["id"] = id;
      GoodnessReport report;
      if (scenario_.trace_kind == TraceKind::kVote) {
        StoryConfig story = c.story;
        if (scenario_.fit_r) {
          const auto fit = on_input([&] {
            return fit_interestingness(samples, story.submitter_network_S, c.vote, c.policy);
          });
          story.interestingness_r = fit.r;
          entry["fitted_r"] = fit.r;
        }
        const double horizon = std::max(c.horizon, samples.back().x);
        const auto model = integrate_votes(story, c.vote, c.policy, horizon);
        const double threshold = promotion_threshold_for(c.policy, story);
        report = on_input([&] {
          return compare_model_to_trace(samples, model.times, model.votes,
                                        observed_promotion_time(samples, threshold), model.promotion_time);
        });
      } else {
        if (scenario_.rank_series != "F" && scenario_.rank_series != "S")
          throw ConfigError("--series: expected F or S");
        const std::vector<double> schedule =
            c.m_schedule.empty() ? std::vector<double>{c.user.submission_rate_M} : c.m_schedule;
        const auto model = integrate_rank(c.user, c.weeks, schedule, c.rank, c.kappa);
        std::vector<double> weeks(model.weeks.begin(), model.weeks.end());
        const auto& series = scenario_.rank_series == "F" ? model.F : model.S;
        report = on_input([&] { return compare_model_to_trace(samples, weeks, series); });
      }
      entry["overlap_count"] = report.overlap_count;
      entry["rms"] = report.rms;
      entry["promotion_time_difference"] = json_optional(report.promotion_time_difference);
      entry["final_value_ratio"] = json_number(report.final_value_ratio);
      out.push_back(std::move(entry));
    }
    return out;
  }

  const Scenario& scenario_;
  ScenarioResult result_;
};

}  // namespace

Sweep parse_sweep(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw ConfigError("--sweep '" + std::string(text) + "': expected KEY=v1,v2,...");
  Sweep sweep;
  sweep.key = std::string(trim(text.substr(0, eq)));
  if (sweep.key.find('.') == std::string::npos)
    throw ConfigError("--sweep '" + std::string(text) + "': KEY must be section.key");
  std::string_view rest = text.substr(eq + 1);
  while (!trim(rest).empty()) {
    const auto comma = rest.find(',');
    const auto value = trim(rest.substr(0, comma));
    if (value.empty()) throw ConfigError("--sweep " + sweep.key + ": empty value in list");
    sweep.values.emplace_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (sweep.values.empty()) throw ConfigError("--sweep " + sweep.key + ": empty value list");
  return sweep;
}

ScenarioResult run_scenario(const Scenario& scenario) {
  try {
    return Runner(scenario).run();
  } catch (const ValidationError& e) {
    throw ConfigError(e.what());
  }
}

ExitCode exit_code_for(const std::exception& error) {
  if (dynamic_cast<const ConfigError*>(&error) || dynamic_cast<const ValidationError*>(&error))
    return ExitCode::kInvalidConfig;
  if (dynamic_cast<const InputError*>(&error)) return ExitCode::kUnreadableInput;
  if (dynamic_cast<const OutputError*>(&error)) return ExitCode::kUnwritableOutput;
  return ExitCode::kInternal;
}

std::string_view tool_version() { return RATEDYN_VERSION; }

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw OutputError("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw OutputError("failed writing " + path.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw OutputError("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
  }
}

}  // namespace ratedyn
