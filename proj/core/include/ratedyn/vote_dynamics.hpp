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

#ifndef RATEDYN_VOTE_DYNAMICS_HPP
#define RATEDYN_VOTE_DYNAMICS_HPP

#include <optional>

#include "ratedyn/params.hpp"

/// Mean-field vote dynamics of a single story.
///
/// A story is seen through four channels: the front page (after promotion),
/// the upcoming queue (before promotion, first 24 h), the submitter's reverse
/// friends and the combined reverse-friend network of its voters (both for
/// 48 h). Each viewer votes with probability r, so per step
///
///     dm = r * (v_front + v_upcoming + v_submitter + v_voters) * dt.
namespace ratedyn {

/// Friends visit about once a day: the hourly rate 1/24 expressed per minute.
inline constexpr double kFriendPoolMinutes = 24.0 * 60.0;
inline constexpr double kFriendViewRatePerMinute = 1.0 / kFriendPoolMinutes;

/// Users per minute who can see the story through each channel.
struct VisibilityBreakdown {
  double v_front = 0.0;
  double v_upcoming = 0.0;
  double v_submitter_friends = 0.0;
  double v_voter_friends = 0.0;

  [[nodiscard]] double total() const {
    return v_front + v_upcoming + v_submitter_friends + v_voter_friends;
  }
};

/// Unit step with the convention step(0) = 1.
[[nodiscard]] constexpr double step(double x) { return x >= 0.0 ? 1.0 : 0.0; }

/// Continuous page number in the upcoming queue: k_u * t + 1.
[[nodiscard]] double page_upcoming(double t, const VoteModelParams& params);

/// Continuous front-page number: 0 before promotion, k_f * (t - T_h) + 1 after.
[[nodiscard]] double page_front(double t, double promotion_time, const VoteModelParams& params);

/// Size of the combined reverse-friend network of the first m voters,
/// max(0, alpha * log_base(m) + beta). Throws std::invalid_argument for m < 1.
[[nodiscard]] double combined_voter_network(double m, double sm_alpha, double sm_beta,
                                            double log_base = std::numbers::e);

/// Per-channel visibility at time t for a story holding m votes.
///
/// The story counts as promoted iff `promotion_time` is set and t >= it; this
/// is the policy-driven form of the step functions step(m - h) / step(h - m).
/// Disabled channels in params.channels report zero.
[[nodiscard]] VisibilityBreakdown visibility(double t, double m, const StoryConfig& story,
                                             std::optional<double> promotion_time,
                                             const VoteModelParams& params);

/// Votes needed for promotion under `policy`.
[[nodiscard]] double promotion_threshold_for(const PromotionPolicy& policy,
                                             const StoryConfig& story);

/// Integrates the vote-update law from m(0) = 1 over [0, horizon].
///
/// Each step uses the pre-step vote count and promotion state, updates m, then
/// checks the policy; the promotion time is the end of the first step at which
/// votes reach the threshold. The explicit time forcing is sampled per
/// params.sampling. Inputs are validated; throws ValidationError or
/// std::invalid_argument (horizon < dt).
[[nodiscard]] VoteTrajectory integrate_votes(const StoryConfig& story,
                                             const VoteModelParams& params,
                                             const PromotionPolicy& policy, double horizon);

/// Limit of the upcoming-queue-only solution, -r c N / (k_u ln c_u) + 1.
/// Throws std::domain_error unless 0 < c_u < 1 and k_u > 0.
[[nodiscard]] double analytic_upcoming_saturation(double r, const VoteModelParams& params);

/// Closed-form upcoming-only votes at time T,
/// r c N (c_u^(k_u T) - 1) / (k_u ln c_u) + 1, ignoring the queue window.
[[nodiscard]] double analytic_upcoming_votes(double r, double T, const VoteModelParams& params);

/// First time after which the per-step increment stays below `tolerance` for
/// `window_steps` consecutive steps; nullopt if it never settles.
[[nodiscard]] std::optional<double> saturation_time(const VoteTrajectory& trajectory,
                                                    double tolerance = 1e-6,
                                                    int window_steps = 60);

}  // namespace ratedyn

#endif  // RATEDYN_VOTE_DYNAMICS_HPP
