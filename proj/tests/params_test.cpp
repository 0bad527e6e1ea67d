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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

#include "ratedyn/params.hpp"

namespace {

using ratedyn::check;
using ratedyn::FixedThreshold;
using ratedyn::NetworkProportional;
using ratedyn::RankModelParams;
using ratedyn::ValidationError;
using ratedyn::VoteModelParams;

bool names_field(const std::vector<ratedyn::Violation>& v, const std::string& field) {
  for (const auto& x : v) {
    if (x.field == field) return true;
  }
  return false;
}

TEST(Params, GoldenDefaults) {
  const VoteModelParams v;
  EXPECT_EQ(v.c, 0.3);
  EXPECT_EQ(v.c_u, 0.3);
  EXPECT_EQ(v.c_f, 0.3);
  EXPECT_EQ(v.visit_rate_N, 10.0);
  EXPECT_EQ(v.threshold_h, 40);
  EXPECT_EQ(v.k_u, 0.060);
  EXPECT_EQ(v.k_f, 0.003);
  EXPECT_EQ(v.sm_alpha, 112.0);
  EXPECT_EQ(v.sm_beta, 47.0);
  EXPECT_EQ(v.sm_log_base, std::numbers::e);
  EXPECT_EQ(v.upcoming_window, 1440.0);
  EXPECT_EQ(v.friends_window, 2880.0);
  EXPECT_EQ(v.dt, 1.0);
  EXPECT_TRUE(v.channels.front && v.channels.upcoming && v.channels.submitter_friends &&
              v.channels.voter_friends);

  const RankModelParams r;
  EXPECT_EQ(r.a, 0.03);
  EXPECT_EQ(r.b, 1.0);
  EXPECT_EQ(r.c_success, 0.002);
  EXPECT_EQ(r.dt_weeks, 1.0);

  EXPECT_EQ(std::get<NetworkProportional>(ratedyn::PromotionPolicy{NetworkProportional{}}).factor, 1.5);
}

TEST(Params, ReferenceValuesAreValid) {
  VoteModelParams v;
  v.c = v.c_u = v.c_f = 0.3;
  v.visit_rate_N = 10;
  v.threshold_h = 40;
  EXPECT_TRUE(check(v).empty());
  EXPECT_NO_THROW(ratedyn::validate(v));
  EXPECT_TRUE(check(RankModelParams{}).empty());
}

TEST(Params, UpcomingAttenuationMustBeBelowOne) {
  VoteModelParams v;
  v.c_u = 1.0;
  const auto violations = check(v);
  ASSERT_EQ(violations.size(), 1U);
  EXPECT_EQ(violations[0].field, "c_u");
  EXPECT_NE(violations[0].message.find("c_u must be < 1"), std::string::npos);
  EXPECT_THROW(ratedyn::validate(v), ValidationError);
}

TEST(Params, ThresholdOfOneRejected) {
  VoteModelParams v;
  v.threshold_h = 1;
  EXPECT_TRUE(names_field(check(v), "threshold_h"));
  EXPECT_FALSE(check(ratedyn::PromotionPolicy{FixedThreshold{1}}).empty());
}

TEST(Params, WindowsMustBeOrdered) {
  VoteModelParams v;
  v.friends_window = v.upcoming_window;
  EXPECT_TRUE(names_field(check(v), "friends_window"));
}

TEST(Params, ErrorNamesEveryViolatedField) {
  VoteModelParams v;
  v.c = 0.0;
  v.c_f = 2.0;
  v.dt = -1.0;
  try {
    ratedyn::validate(v);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.violations().size(), 3U);
    const std::string what = e.what();
    for (const char* field : {"c:", "c_f:", "dt:"}) EXPECT_NE(what.find(field), std::string::npos) << what;
  }
}

TEST(Params, ObservationBounds) {
  ratedyn::FriendVoteObservation obs{15742, 215, 100, 3};
  EXPECT_TRUE(check(obs).empty());
  obs.overlap_k = 101;
  EXPECT_TRUE(names_field(check(obs), "overlap_k"));
  obs = {10, 11, 5, 0};
  EXPECT_TRUE(names_field(check(obs), "sample_n"));
  obs = {10, 5, 11, 0};
  EXPECT_TRUE(names_field(check(obs), "group_K"));
}

TEST(Params, StoryBounds) {
  EXPECT_TRUE(check(ratedyn::StoryConfig{0.0, 0}).empty());
  EXPECT_TRUE(check(ratedyn::StoryConfig{1.0, 400}).empty());
  EXPECT_TRUE(names_field(check(ratedyn::StoryConfig{1.5, 0}), "interestingness_r"));
  EXPECT_TRUE(names_field(check(ratedyn::StoryConfig{0.5, -1}), "submitter_network_S"));
}

// Validation is total: arbitrary field values, including NaN and infinities,
// either pass or produce field-named violations; nothing else escapes.
TEST(Params, ValidationIsTotal) {
  std::mt19937_64 rng(42);
  const double specials[] = {0.0, -0.0, 1.0, -1.0, 0.3, 1e300, -1e300,
                             std::numeric_limits<double>::quiet_NaN(),
                             std::numeric_limits<double>::infinity(),
                             -std::numeric_limits<double>::infinity()};
  std::uniform_int_distribution<int> pick(0, std::size(specials) - 1);
  std::uniform_real_distribution<double> any(-2.0, 3000.0);
  auto draw = [&] { return rng() % 2 ? specials[pick(rng)] : any(rng); };

  for (int i = 0; i < 2000; ++i) {
    VoteModelParams v;
    v.c = draw();
    v.c_u = draw();
    v.c_f = draw();
    v.visit_rate_N = draw();
    v.threshold_h = static_cast<int>(rng() % 100) - 10;
    v.k_u = draw();
    v.k_f = draw();
    v.sm_alpha = draw();
    v.sm_beta = draw();
    v.sm_log_base = draw();
    v.upcoming_window = draw();
    v.friends_window = draw();
    v.dt = draw();
    const auto violations = check(v);
    for (const auto& x : violations) EXPECT_FALSE(x.field.empty());
    if (violations.empty()) {
      EXPECT_TRUE(v.c_u > 0 && v.c_u < 1 && v.c_f > 0 && v.c_f < 1 && v.dt > 0 && v.threshold_h >= 2);
    } else {
      EXPECT_THROW(ratedyn::validate(v), ValidationError);
    }

    RankModelParams r{draw(), draw(), draw(), draw()};
    const auto rv = check(r);
    if (rv.empty()) EXPECT_TRUE(r.a >= 0 && r.b >= 0 && r.c_success >= 0 && r.dt_weeks > 0);
  }
}

}  // namespace
