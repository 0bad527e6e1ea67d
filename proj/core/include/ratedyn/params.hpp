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

#ifndef RATEDYN_PARAMS_HPP
#define RATEDYN_PARAMS_HPP

#include <cstdint>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

/// Domain types and parameter validation shared by every ratedyn module.
///
/// Vote-model times are minutes; rank-model times are weeks. All records are
/// plain values: validate once, then share freely between concurrent runs.
namespace ratedyn {

/// Which visibility channels contribute to a story's vote rate.
struct Channels {
  bool front = true;
  bool upcoming = true;
  bool submitter_friends = true;
  bool voter_friends = true;

  friend bool operator==(const Channels&, const Channels&) = default;
};

/// Where inside a step of length dt the explicit time forcing (page position,
/// queue and friends windows) is sampled. The vote count itself is always the
/// pre-step value.
enum class TimeSampling {
  kMidpoint,   ///< t + dt/2; matches the continuous-time solution to O(dt^2)
  kStepStart,  ///< t; plain left-point Euler
};

struct VoteModelParams {
  double c = 0.3;             ///< share of visitors entering the upcoming section
  double c_u = 0.3;           ///< per-page attenuation in the upcoming queue
  double c_f = 0.3;           ///< per-page attenuation on the front page
  double visit_rate_N = 10.0; ///< visitors per minute
  int threshold_h = 40;       ///< votes needed under the fixed policy
  double k_u = 0.060;         ///< upcoming-queue drift, pages per minute
  double k_f = 0.003;         ///< front-page drift, pages per minute
  double sm_alpha = 112.0;    ///< combined voter network: alpha * log(m) + beta
  double sm_beta = 47.0;
  double sm_log_base = std::numbers::e;
  double upcoming_window = 1440.0;  ///< minutes a story stays in the queue
  double friends_window = 2880.0;   ///< minutes a story is visible to friends
  double dt = 1.0;                  ///< integration step, minutes
  Channels channels{};
  TimeSampling sampling = TimeSampling::kMidpoint;

  friend bool operator==(const VoteModelParams&, const VoteModelParams&) = default;
};

struct StoryConfig {
  double interestingness_r = 0.5;
  std::int64_t submitter_network_S = 0;

  friend bool operator==(const StoryConfig&, const StoryConfig&) = default;
};

/// Vote count over time. Mean-field runs are real-valued; stochastic runs
/// hold integers stored as doubles.
struct VoteTrajectory {
  std::vector<double> times;
  std::vector<double> votes;
  std::optional<double> promotion_time;

  [[nodiscard]] double final_votes() const { return votes.empty() ? 0.0 : votes.back(); }
  [[nodiscard]] bool promoted() const { return promotion_time.has_value(); }
};

struct FixedThreshold {
  int h = 40;
  friend bool operator==(const FixedThreshold&, const FixedThreshold&) = default;
};

/// Promote once votes reach factor * S, never below `floor` votes.
struct NetworkProportional {
  double factor = 1.5;
  double floor = 2.0;
  friend bool operator==(const NetworkProportional&, const NetworkProportional&) = default;
};

using PromotionPolicy = std::variant<FixedThreshold, NetworkProportional>;

struct RankModelParams {
  double a = 0.03;          ///< organic growth: reverse friends per front-page story per week
  double b = 1.0;           ///< reverse friends gained per newly promoted story
  double c_success = 0.002; ///< promotion success rate per reverse friend
  double dt_weeks = 1.0;

  friend bool operator==(const RankModelParams&, const RankModelParams&) = default;
};

struct UserState {
  double front_page_F = 0.0;
  double network_S = 0.0;
  double submission_rate_M = 0.0;  ///< stories per week

  friend bool operator==(const UserState&, const UserState&) = default;
};

struct FriendVoteObservation {
  std::int64_t pool_N = 0;
  std::int64_t sample_n = 0;
  std::int64_t group_K = 0;
  std::int64_t overlap_k = 0;

  friend bool operator==(const FriendVoteObservation&, const FriendVoteObservation&) = default;
};

/// One failed invariant: the offending field and a human-readable bound.
struct Violation {
  std::string field;
  std::string message;
};

/// Thrown by the validate_* functions; what() lists every violation.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  [[nodiscard]] const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

[[nodiscard]] std::vector<Violation> check(const VoteModelParams& params);
[[nodiscard]] std::vector<Violation> check(const RankModelParams& params);
[[nodiscard]] std::vector<Violation> check(const StoryConfig& story);
[[nodiscard]] std::vector<Violation> check(const PromotionPolicy& policy);
[[nodiscard]] std::vector<Violation> check(const UserState& state);
[[nodiscard]] std::vector<Violation> check(const FriendVoteObservation& obs);

/// Returns the argument unchanged, or throws ValidationError naming every
/// violated field.
template <typename T>
const T& validate(const T& value) {
  auto violations = check(value);
  if (!violations.empty()) throw ValidationError(std::move(violations));
  return value;
}

[[nodiscard]] PromotionPolicy default_policy(const VoteModelParams& params);

}  // namespace ratedyn

#endif  // RATEDYN_PARAMS_HPP
