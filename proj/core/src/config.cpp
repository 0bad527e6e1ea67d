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

#include "ratedyn/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace ratedyn {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(const std::string& key, std::string_view value, const char* expected) {
  throw ConfigError(key + ": expected " + expected + ", got '" + std::string(value) + "'");
}

double to_double(const std::string& key, std::string_view text) {
  if (text == "e") return std::numbers::e;
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) bad_value(key, text, "a finite number");
  return value;
}

template <typename Int>
Int to_int(const std::string& key, std::string_view text) {
  Int value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) bad_value(key, text, "an integer");
  return value;
}

bool to_bool(const std::string& key, std::string_view text) {
  if (text == "true" || text == "1") return true;
  if (text == "false" || text == "0") return false;
  bad_value(key, text, "true or false");
}

std::vector<double> to_list(const std::string& key, std::string_view text) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(to_double(key, trim(text.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (out.empty()) bad_value(key, text, "a comma-separated list of numbers");
  return out;
}

struct PolicyDraft {
  std::string kind = "fixed";
  std::optional<int> h;
  double factor = 1.5;
  double floor = 2.0;
};

using Setter = std::function<void(ResolvedConfig&, PolicyDraft&, const std::string&, std::string_view)>;

template <typename Member>
Setter real(Member member) {
  return [member](ResolvedConfig& c, PolicyDraft&, const std::string& key, std::string_view v) {
    std::invoke(member, c) = to_double(key, v);
  };
}

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = [] {
    std::map<std::string, Setter, std::less<>> t;
    auto vote = [](double VoteModelParams::*field) {
      return [field](ResolvedConfig& c, PolicyDraft&, const std::string& key, std::string_view v) {
        c.vote.*field = to_double(key, v);
      };
    };
    auto channel = [](bool Channels::*field) {
      return [field](ResolvedConfig& c, PolicyDraft&, const std::string& key, std::string_view v) {
        c.vote.channels.*field = to_bool(key, v);
      };
    };
    t["vote.c"] = vote(&VoteModelParams::c);
    t["vote.c_u"] = vote(&VoteModelParams::c_u);
    t["vote.c_f"] = vote(&VoteModelParams::c_f);
    t["vote.visit_rate_N"] = vote(&VoteModelParams::visit_rate_N);
    t["vote.threshold_h"] = [](ResolvedConfig& c, PolicyDraft&, const std::string& key, std::string_view v) {
      c.vote.threshold_h = to_int<int>(key, v);
    };
    t["vote.k_u"] = vote(&VoteModelParams::k_u);
    t["vote.k_f"] = vote(&VoteModelParams::k_f);
    t["vote.sm_alpha"] = vote(&VoteModelParams::sm_alpha);
    t["vote.sm_beta"] = vote(&VoteModelParams::sm_beta);
    t["vote.sm_log_base"] = vote(&VoteModelParams::sm_log_base);
    t["vote.upcoming_window"] = vote(&VoteModelParams::upcoming_window);
    t["vote.friends_window"] = vote(&VoteModelParams::friends_window);
    t["vote.dt"] = vote(&VoteModelParams::dt);
    t["vote.channel_front"] = channel(&Channels::front);
    t["vote.channel_upcoming"] = channel(&Channels::upcoming);
    t["vote.channel_submitter_friends"] = channel(&Channels::submitter_friends);
    t["vote.channel_voter_friends"] = channel(&Channels::voter_friends);
    t["vote.time_sampling"] = [](ResolvedConfig& c, PolicyDraft&, const std::string& key, std::string_view v) {
      if (v == "midpoint") c.vote.sampling = TimeSampling::kMidpoint;
      else if (v == "step_start") c.vote.sampling = TimeSampling::kStepStart;
      else bad_value(key, v, "midpoint or step_start");
    };

    t["story.interestingness_r"] = [](ResolvedConfig& c, PolicyDraft&, const std::string& key, std::string_view v) {
      c.story.interestingness_r = to_double(key, v);
    };
    t["story.submitter_network_S"] = [](ResolvedConfig& c, PolicyDraft&, const std::string& key, std::string_view v) {
      c.story.submitter_network_S = to_int<std::int64_t>(key, v);
    };
    t["story.horizon"] = real(&ResolvedConfig::horizon);

    t["policy.kind"] = [](ResolvedConfig&, PolicyDraft& p, const std::string& key, std::string_view v) {
      if (v != "fixed" && v != "network_proportional") bad_value(key, v, "fixed or network_proportional");
      p.kind = std::string(v);
    };
    t["policy.h"] = [](ResolvedConfig&, PolicyDraft& p, const std::string& key, std::string_view v) {
      p.h = to_int<int>(key, v);
    };
    t["policy.factor"] = [](ResolvedConfig&, PolicyDraft& p, const std::string& key, std::string_view v) {
      p.factor = to_double(key, v);
    };
    t["policy.floor"] = [](ResolvedConfig&, PolicyDraft& p, const std::string& key, std::string_view v) {
      p.floor = to_double(key, v);
    };

    t["rank.a"] = [](ResolvedConfig& c, PolicyDraft&, const std::string& key, std::string_view v) {
      c.rank.a = to_double(key, v);
    };
    t["rank.b"] = [](ResolvedConfig& c, PolicyDraft&, const std::string& key, std::string_view v) {
      c.rank.b = to_double(key, v);
    };
    t["rank.c_success"] = [](ResolvedConfig& c, PolicyDraft&, const std::string& key, std::string_view v) {
      c.rank.c_success = to_double(key, v);
    };
    t["rank.dt_weeks"] = [](ResolvedConfig& c, PolicyDraft&, const std::string& key, std::string_view v) {
      c.rank.dt_weeks = to_double(key, v);
    };
    t["rank.weeks"] = [](ResolvedConfig& c, PolicyDraft&, const std::string& key, std::string_view v) {
      c.weeks = to_int<int>(key, v);
    };
    t["rank.kappa"] = real(&ResolvedConfig::kappa);
    t["rank.M_schedule"] = [](ResolvedConfig& c, PolicyDraft&, const std::string& key, std::string_view v) {
      c.m_schedule = to_list(key, v);
    };

    t["user.front_page_F"] = [](ResolvedConfig& c, PolicyDraft&, const std::string& key, std::string_view v) {
      c.user.front_page_F = to_double(key, v);
    };
    t["user.network_S"] = [](ResolvedConfig& c, PolicyDraft&, const std::string& key, std::string_view v) {
      c.user.network_S = to_double(key, v);
    };
    t["user.submission_rate_M"] = [](ResolvedConfig& c, PolicyDraft&, const std::string& key, std::string_view v) {
      c.user.submission_rate_M = to_double(key, v);
    };

    t["ensemble.runs"] = [](ResolvedConfig& c, PolicyDraft&, const std::string& key, std::string_view v) {
      c.runs = to_int<int>(key, v);
    };
    t["ensemble.seed"] = [](ResolvedConfig& c, PolicyDraft&, const std::string& key, std::string_view v) {
      c.seed = to_int<std::uint64_t>(key, v);
    };
    t["ensemble.arrivals"] = [](ResolvedConfig& c, PolicyDraft&, const std::string& key, std::string_view v) {
      if (v == "poisson") c.arrivals = ArrivalMode::kPoisson;
      else if (v == "mean") c.arrivals = ArrivalMode::kMean;
      else bad_value(key, v, "poisson or mean");
    };
    t["ensemble.threads"] = [](ResolvedConfig& c, PolicyDraft&, const std::string& key, std::string_view v) {
      c.threads = to_int<unsigned>(key, v);
    };

    t["fit.through_origin"] = [](ResolvedConfig& c, PolicyDraft&, const std::string& key, std::string_view v) {
      c.fit.through_origin = to_bool(key, v);
    };
    t["fit.log_base"] = [](ResolvedConfig& c, PolicyDraft&, const std::string& key, std::string_view v) {
      c.fit.log_base = to_double(key, v);
    };
    t["fit.bins"] = [](ResolvedConfig& c, PolicyDraft&, const std::string& key, std::string_view v) {
      c.fit.bins = to_int<int>(key, v);
    };
    t["fit.min_submissions"] = [](ResolvedConfig& c, PolicyDraft&, const std::string& key, std::string_view v) {
      c.fit.min_submissions = to_double(key, v);
    };
    return t;
  }();
  return table;
}

void require_valid(const std::string& section, std::vector<Violation> violations) {
  if (violations.empty()) return;
  std::string msg = "invalid configuration:";
  for (const auto& v : violations) msg += "\n  " + section + "." + v.field + ": " + v.message;
  throw ConfigError(msg);
}

std::string format_base(double base) {
  return base == std::numbers::e ? std::string("e") : format_double(base);
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

ConfigFile parse_config(std::string_view text) {
  ConfigFile out;
  std::string section;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3)
        throw ConfigError("config line " + std::to_string(line_no) + ": malformed section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (section.empty())
      throw ConfigError("config line " + std::to_string(line_no) + ": key '" + std::string(key) +
                        "' outside of a [section]");
    if (key.empty()) throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    out[section][std::string(key)] = std::string(value);
  }
  return out;
}

ConfigFile load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

void set_config_value(ConfigFile& config, std::string_view dotted_key, std::string value) {
  const auto dot = dotted_key.find('.');
  if (dot == std::string_view::npos || dot == 0 || dot + 1 == dotted_key.size())
    throw ConfigError("'" + std::string(dotted_key) + "': expected section.key");
  config[std::string(dotted_key.substr(0, dot))][std::string(dotted_key.substr(dot + 1))] =
      std::move(value);
}

ResolvedConfig resolve_config(const ConfigFile& config) {
  ResolvedConfig out;
  PolicyDraft policy;
  const auto& table = setters();
  for (const auto& [section, entries] : config) {
    for (const auto& [key, value] : entries) {
      const std::string dotted = section + "." + key;
      const auto it = table.find(dotted);
      if (it == table.end()) throw ConfigError(dotted + ": unknown configuration key");
      it->second(out, policy, dotted, value);
    }
  }
  if (policy.kind == "fixed") {
    out.policy = FixedThreshold{policy.h.value_or(out.vote.threshold_h)};
  } else {
    out.policy = NetworkProportional{policy.factor, policy.floor};
  }

  require_valid("vote", check(out.vote));
  require_valid("story", check(out.story));
  require_valid("policy", check(out.policy));
  require_valid("rank", check(out.rank));
  require_valid("user", check(out.user));
  if (!(out.horizon >= out.vote.dt)) throw ConfigError("story.horizon: must be >= vote.dt");
  if (out.weeks < 1) throw ConfigError("rank.weeks: must be >= 1");
  if (!(out.kappa > 0.0)) throw ConfigError("rank.kappa: must be > 0");
  if (!out.m_schedule.empty() && out.m_schedule.size() != 1 &&
      out.m_schedule.size() != static_cast<std::size_t>(out.weeks)) {
    throw ConfigError("rank.M_schedule: has " + std::to_string(out.m_schedule.size()) +
                      " entries, expected 1 or rank.weeks = " + std::to_string(out.weeks));
  }
  for (double m : out.m_schedule) {
    if (m < 0.0) throw ConfigError("rank.M_schedule: submission rates must be >= 0");
  }
  if (out.runs < 1) throw ConfigError("ensemble.runs: must be >= 1");
  if (!(out.fit.log_base > 0.0) || out.fit.log_base == 1.0)
    throw ConfigError("fit.log_base: must be > 0 and != 1");
  if (out.fit.bins < 1) throw ConfigError("fit.bins: must be >= 1");
  if (out.fit.min_submissions < 0.0) throw ConfigError("fit.min_submissions: must be >= 0");
  return out;
}

std::vector<std::pair<std::string, std::string>> config_entries(const ResolvedConfig& c) {
  std::vector<std::pair<std::string, std::string>> e;
  auto num = [&](const char* key, double v) { e.emplace_back(key, format_double(v)); };
  auto flag = [&](const char* key, bool v) { e.emplace_back(key, v ? "true" : "false"); };
  const auto& v = c.vote;
  num("vote.c", v.c);
  num("vote.c_u", v.c_u);
  num("vote.c_f", v.c_f);
  num("vote.visit_rate_N", v.visit_rate_N);
  e.emplace_back("vote.threshold_h", std::to_string(v.threshold_h));
  num("vote.k_u", v.k_u);
  num("vote.k_f", v.k_f);
  num("vote.sm_alpha", v.sm_alpha);
  num("vote.sm_beta", v.sm_beta);
  e.emplace_back("vote.sm_log_base", format_base(v.sm_log_base));
  num("vote.upcoming_window", v.upcoming_window);
  num("vote.friends_window", v.friends_window);
  num("vote.dt", v.dt);
  flag("vote.channel_front", v.channels.front);
  flag("vote.channel_upcoming", v.channels.upcoming);
  flag("vote.channel_submitter_friends", v.channels.submitter_friends);
  flag("vote.channel_voter_friends", v.channels.voter_friends);
  e.emplace_back("vote.time_sampling",
                 v.sampling == TimeSampling::kMidpoint ? "midpoint" : "step_start");

  num("story.interestingness_r", c.story.interestingness_r);
  e.emplace_back("story.submitter_network_S", std::to_string(c.story.submitter_network_S));
  num("story.horizon", c.horizon);

  if (const auto* fixed = std::get_if<FixedThreshold>(&c.policy)) {
    e.emplace_back("policy.kind", "fixed");
    e.emplace_back("policy.h", std::to_string(fixed->h));
  } else {
    const auto& prop = std::get<NetworkProportional>(c.policy);
    e.emplace_back("policy.kind", "network_proportional");
    num("policy.factor", prop.factor);
    num("policy.floor", prop.floor);
  }

  num("rank.a", c.rank.a);
  num("rank.b", c.rank.b);
  num("rank.c_success", c.rank.c_success);
  num("rank.dt_weeks", c.rank.dt_weeks);
  e.emplace_back("rank.weeks", std::to_string(c.weeks));
  num("rank.kappa", c.kappa);
  if (!c.m_schedule.empty()) {
    std::string list;
    for (std::size_t i = 0; i < c.m_schedule.size(); ++i) {
      if (i) list += ",";
      list += format_double(c.m_schedule[i]);
    }
    e.emplace_back("rank.M_schedule", list);
  }
  num("user.front_page_F", c.user.front_page_F);
  num("user.network_S", c.user.network_S);
  num("user.submission_rate_M", c.user.submission_rate_M);

  e.emplace_back("ensemble.runs", std::to_string(c.runs));
  e.emplace_back("ensemble.seed", std::to_string(c.seed));
  e.emplace_back("ensemble.arrivals", c.arrivals == ArrivalMode::kPoisson ? "poisson" : "mean");
  e.emplace_back("ensemble.threads", std::to_string(c.threads));

  flag("fit.through_origin", c.fit.through_origin);
  e.emplace_back("fit.log_base", format_base(c.fit.log_base));
  e.emplace_back("fit.bins", std::to_string(c.fit.bins));
  num("fit.min_submissions", c.fit.min_submissions);
  return e;
}

std::string to_config_text(const ResolvedConfig& config) {
  std::string out;
  std::string section;
  for (const auto& [dotted, value] : config_entries(config)) {
    const auto dot = dotted.find('.');
    const auto sec = dotted.substr(0, dot);
    if (sec != section) {
      if (!section.empty()) out += "\n";
      out += "[" + sec + "]\n";
      section = sec;
    }
    out += dotted.substr(dot + 1) + " = " + value + "\n";
  }
  return out;
}

}  // namespace ratedyn
