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

#ifndef RATEDYN_CONFIG_HPP
#define RATEDYN_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ratedyn/params.hpp"
#include "ratedyn/stochastic.hpp"

/// Plain-text scenario configuration:
///
///     # comment
///     [vote]
///     c_u = 0.3
///     [story]
///     submitter_network_S = 80
///
/// Keys mirror the field names of the parameter records. Unknown sections or
/// keys are errors.
namespace ratedyn {

/// Bad configuration or command-line input. Maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Missing, unreadable or malformed input file. Maps to exit status 3.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output could not be written. Maps to exit status 4.
class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// section -> key -> raw value, in sorted order.
using ConfigFile = std::map<std::string, std::map<std::string, std::string>>;

[[nodiscard]] ConfigFile parse_config(std::string_view text);

/// Throws InputError if the file cannot be read, ConfigError if it is malformed.
[[nodiscard]] ConfigFile load_config(const std::filesystem::path& path);

/// Sets "section.key" to `value`; throws ConfigError if the dotted key is malformed.
void set_config_value(ConfigFile& config, std::string_view dotted_key, std::string value);

struct FitOptions {
  bool through_origin = false;
  double log_base = std::numbers::e;
  int bins = 10;
  double min_submissions = 50.0;

  friend bool operator==(const FitOptions&, const FitOptions&) = default;
};

/// Every input a scenario can need, fully defaulted.
struct ResolvedConfig {
  VoteModelParams vote{};
  StoryConfig story{};
  double horizon = 2880.0;
  PromotionPolicy policy{FixedThreshold{}};
  RankModelParams rank{};
  UserState user{};
  int weeks = 25;
  std::vector<double> m_schedule{};  ///< empty = use user.submission_rate_M every week
  double kappa = 1.0;
  int runs = 1000;
  std::uint64_t seed = 1;
  ArrivalMode arrivals = ArrivalMode::kPoisson;
  unsigned threads = 0;
  FitOptions fit{};

  friend bool operator==(const ResolvedConfig&, const ResolvedConfig&) = default;
};

/// Applies `config` over the defaults and validates the result. Throws
/// ConfigError naming the offending `section.key`.
[[nodiscard]] ResolvedConfig resolve_config(const ConfigFile& config);

/// Canonical text form; resolve_config(parse_config(to_config_text(x))) == x.
[[nodiscard]] std::string to_config_text(const ResolvedConfig& config);

/// Canonical form as ordered (section.key, value) pairs.
[[nodiscard]] std::vector<std::pair<std::string, std::string>> config_entries(
    const ResolvedConfig& config);

/// Shortest decimal string that round-trips to `value`.
[[nodiscard]] std::string format_double(double value);

}  // namespace ratedyn

#endif  // RATEDYN_CONFIG_HPP
