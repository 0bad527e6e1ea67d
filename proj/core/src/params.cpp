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

#include "ratedyn/params.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ratedyn {

namespace {

std::string join(const std::vector<Violation>& violations) {
  std::ostringstream out;
  out << "invalid parameters:";
  for (const auto& v : violations) out << "\n  " << v.field << ": " << v.message;
  return out.str();
}

class Checker {
 public:
  Checker& finite(const char* field, double value) {
    if (!std::isfinite(value)) add(field, "must be finite");
    return *this;
  }
  void require(bool ok, const char* field, std::string message) {
    if (!ok) add(field, std::move(message));
  }
  void add(const char* field, std::string message) {
    violations_.push_back({field, std::move(message)});
  }
  std::vector<Violation> take() { return std::move(violations_); }

 private:
  std::vector<Violation> violations_;
};

// NaN fails every comparison, so each bound below also rejects NaN.
bool open_unit(double x) { return x > 0.0 && x < 1.0; }

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::invalid_argument(join(violations)), violations_(std::move(violations)) {}

std::vector<Violation> check(const VoteModelParams& p) {
  Checker ck;
  ck.require(p.c > 0.0 && p.c <= 1.0, "c", "c must be in (0, 1]");
  ck.require(open_unit(p.c_u), "c_u",
             p.c_u >= 1.0 ? "c_u must be < 1 (upcoming saturation diverges)" : "c_u must be in (0, 1)");
  ck.require(open_unit(p.c_f), "c_f", p.c_f >= 1.0 ? "c_f must be < 1" : "c_f must be in (0, 1)");
  ck.require(p.visit_rate_N > 0.0 && std::isfinite(p.visit_rate_N), "visit_rate_N",
             "visit_rate_N must be > 0");
  ck.require(p.threshold_h >= 2, "threshold_h",
             "threshold_h must be >= 2 (a story starts with one vote)");
  ck.require(p.k_u > 0.0 && std::isfinite(p.k_u), "k_u", "k_u must be > 0");
  ck.require(p.k_f >= 0.0 && std::isfinite(p.k_f), "k_f", "k_f must be >= 0");
  ck.finite("sm_alpha", p.sm_alpha).finite("sm_beta", p.sm_beta);
  ck.require(p.sm_log_base > 0.0 && p.sm_log_base != 1.0 && std::isfinite(p.sm_log_base),
             "sm_log_base", "sm_log_base must be > 0 and != 1");
  ck.require(p.upcoming_window > 0.0, "upcoming_window", "upcoming_window must be > 0");
  ck.require(p.upcoming_window < p.friends_window && std::isfinite(p.friends_window),
             "friends_window", "friends_window must exceed upcoming_window");
  ck.require(p.dt > 0.0 && std::isfinite(p.dt), "dt", "dt must be > 0");
  return ck.take();
}

std::vector<Violation> check(const RankModelParams& p) {
  Checker ck;
  ck.require(p.a >= 0.0 && std::isfinite(p.a), "a", "a must be >= 0");
  ck.require(p.b >= 0.0 && std::isfinite(p.b), "b", "b must be >= 0");
  ck.require(p.c_success >= 0.0 && std::isfinite(p.c_success), "c_success",
             "c_success must be >= 0");
  ck.require(p.dt_weeks > 0.0 && std::isfinite(p.dt_weeks), "dt_weeks", "dt_weeks must be > 0");
  return ck.take();
}

std::vector<Violation> check(const StoryConfig& s) {
  Checker ck;
  ck.require(s.interestingness_r >= 0.0 && s.interestingness_r <= 1.0, "interestingness_r",
             "interestingness_r must be in [0, 1]");
  ck.require(s.submitter_network_S >= 0, "submitter_network_S", "submitter_network_S must be >= 0");
  return ck.take();
}

std::vector<Violation> check(const PromotionPolicy& policy) {
  Checker ck;
  if (const auto* fixed = std::get_if<FixedThreshold>(&policy)) {
    ck.require(fixed->h >= 2, "h", "h must be >= 2");
  } else {
    const auto& prop = std::get<NetworkProportional>(policy);
    ck.require(prop.factor > 0.0 && std::isfinite(prop.factor), "factor", "factor must be > 0");
    ck.require(prop.floor >= 2.0 && std::isfinite(prop.floor), "floor", "floor must be >= 2");
  }
  return ck.take();
}

std::vector<Violation> check(const UserState& u) {
  Checker ck;
  ck.require(u.front_page_F >= 0.0 && std::isfinite(u.front_page_F), "front_page_F",
             "front_page_F must be >= 0");
  ck.require(u.network_S >= 0.0 && std::isfinite(u.network_S), "network_S",
             "network_S must be >= 0");
  ck.require(u.submission_rate_M >= 0.0 && std::isfinite(u.submission_rate_M),
             "submission_rate_M", "submission_rate_M must be >= 0");
  return ck.take();
}

std::vector<Violation> check(const FriendVoteObservation& o) {
  Checker ck;
  ck.require(o.pool_N > 0, "pool_N", "pool_N must be > 0");
  ck.require(o.sample_n >= 0 && o.sample_n <= o.pool_N, "sample_n", "sample_n must be in [0, pool_N]");
  ck.require(o.group_K >= 0 && o.group_K <= o.pool_N, "group_K", "group_K must be in [0, pool_N]");
  ck.require(o.overlap_k >= 0 && o.overlap_k <= std::min(o.sample_n, o.group_K), "overlap_k",
             "overlap_k must be in [0, min(sample_n, group_K)]");
  return ck.take();
}

PromotionPolicy default_policy(const VoteModelParams& params) {
  return FixedThreshold{params.threshold_h};
}

}  // namespace ratedyn
