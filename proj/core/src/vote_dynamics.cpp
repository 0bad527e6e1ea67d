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

#include "ratedyn/vote_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ratedyn {

double page_upcoming(double t, const VoteModelParams& params) { return params.k_u * t + 1.0; }

double page_front(double t, double promotion_time, const VoteModelParams& params) {
  if (t < promotion_time) return 0.0;
  return params.k_f * (t - promotion_time) + 1.0;
}

double combined_voter_network(double m, double sm_alpha, double sm_beta, double log_base) {
  if (!(m >= 1.0)) throw std::invalid_argument("combined_voter_network: m must be >= 1");
  const double log_m = log_base == std::numbers::e ? std::log(m) : std::log(m) / std::log(log_base);
  return std::max(0.0, sm_alpha * log_m + sm_beta);
}

VisibilityBreakdown visibility(double t, double m, const StoryConfig& story,
                               std::optional<double> promotion_time,
                               const VoteModelParams& params) {
  const bool promoted = promotion_time.has_value() && t >= *promotion_time;
  const double N = params.visit_rate_N;
  const auto& on = params.channels;

  VisibilityBreakdown v;
  if (on.front && promoted) {
    const double p = page_front(t, *promotion_time, params);
    v.v_front = std::pow(params.c_f, p - 1.0) * N;
  }
  if (on.upcoming && !promoted) {
    const double q = page_upcoming(t, params);
    v.v_upcoming = params.c * std::pow(params.c_u, q - 1.0) * N * step(params.upcoming_window - t);
  }
  if (on.submitter_friends) {
    const double S = static_cast<double>(story.submitter_network_S);
    const double a = S * kFriendViewRatePerMinute;
    // S - a t >= 0 is t <= kFriendPoolMinutes; compared in that form so the
    // boundary does not depend on rounding of a * t.
    v.v_submitter_friends = a * step(kFriendPoolMinutes - t) * step(params.friends_window - t);
  }
  if (on.voter_friends && !promoted) {
    const double Sm = combined_voter_network(m, params.sm_alpha, params.sm_beta, params.sm_log_base);
    v.v_voter_friends = kFriendViewRatePerMinute * Sm * step(params.friends_window - t);
  }
  return v;
}

double promotion_threshold_for(const PromotionPolicy& policy, const StoryConfig& story) {
  if (const auto* fixed = std::get_if<FixedThreshold>(&policy)) return fixed->h;
  const auto& prop = std::get<NetworkProportional>(policy);
  return std::max(prop.floor, prop.factor * static_cast<double>(story.submitter_network_S));
}

VoteTrajectory integrate_votes(const StoryConfig& story, const VoteModelParams& params,
                               const PromotionPolicy& policy, double horizon) {
  validate(story);
  validate(params);
  validate(policy);
  const double dt = params.dt;
  if (!(horizon >= dt)) throw std::invalid_argument("integrate_votes: horizon must be >= dt");

  const auto steps = static_cast<std::size_t>(std::floor(horizon / dt + 1e-9));
  const double threshold = promotion_threshold_for(policy, story);
  const double r = story.interestingness_r;
  const double offset = params.sampling == TimeSampling::kMidpoint ? 0.5 * dt : 0.0;

  VoteTrajectory out;
  out.times.reserve(steps + 1);
  out.votes.reserve(steps + 1);

  double m = 1.0;
  out.times.push_back(0.0);
  out.votes.push_back(m);
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) * dt;
    const auto v = visibility(t + offset, m, story, out.promotion_time, params);
    m += r * v.total() * dt;
    const double t_next = static_cast<double>(i + 1) * dt;
    if (!out.promotion_time && m >= threshold) out.promotion_time = t_next;
    out.times.push_back(t_next);
    out.votes.push_back(m);
  }
  return out;
}

double analytic_upcoming_saturation(double r, const VoteModelParams& params) {
  if (!(params.c_u > 0.0 && params.c_u < 1.0))
    throw std::domain_error("analytic_upcoming_saturation: c_u must be in (0, 1)");
  if (!(params.k_u > 0.0)) throw std::domain_error("analytic_upcoming_saturation: k_u must be > 0");
  return -r * params.c * params.visit_rate_N / (params.k_u * std::log(params.c_u)) + 1.0;
}

double analytic_upcoming_votes(double r, double T, const VoteModelParams& params) {
  if (!(params.c_u > 0.0 && params.c_u < 1.0))
    throw std::domain_error("analytic_upcoming_votes: c_u must be in (0, 1)");
  if (!(params.k_u > 0.0)) throw std::domain_error("analytic_upcoming_votes: k_u must be > 0");
  const double log_cu = std::log(params.c_u);
  return r * params.c * params.visit_rate_N * std::expm1(params.k_u * T * log_cu) /
             (params.k_u * log_cu) +
         1.0;
}

std::optional<double> saturation_time(const VoteTrajectory& trajectory, double tolerance,
                                      int window_steps) {
  const auto& m = trajectory.votes;
  int quiet = 0;
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (m[i] - m[i - 1] < tolerance) {
      if (++quiet == window_steps) return trajectory.times[i - static_cast<std::size_t>(window_steps)];
    } else {
      quiet = 0;
    }
  }
  return std::nullopt;
}

}  // namespace ratedyn
