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
#include <vector>

#include "ratedyn/rank_dynamics.hpp"

namespace {

using ratedyn::integrate_rank;
using ratedyn::RankModelParams;
using ratedyn::UserState;

TEST(StepWeek, WorkedExample) {
  const auto next = ratedyn::step_week({50.0, 1000.0, 1.0}, RankModelParams{});
  EXPECT_NEAR(next.front_page_F - 50.0, 2.0, 1e-12);
  EXPECT_NEAR(next.network_S - 1000.0, 3.5, 1e-12);
  EXPECT_EQ(next.submission_rate_M, 1.0);
}

TEST(StepWeek, UsesPreStepState) {
  RankModelParams p;
  p.a = 0.5;
  p.b = 2.0;
  p.c_success = 0.1;
  p.dt_weeks = 0.5;
  const auto next = ratedyn::step_week({4.0, 10.0, 3.0}, p);
  // dF = 0.1 * 10 * 3 * 0.5 = 1.5; dS = 0.5 * 4 * 0.5 + 2 * 1.5 = 4.
  EXPECT_NEAR(next.front_page_F, 5.5, 1e-12);
  EXPECT_NEAR(next.network_S, 14.0, 1e-12);
}

// No submissions: F is frozen and S grows by a*F per week exactly.
TEST(IntegrateRank, StagnationIsArithmetic) {
  const RankModelParams p;
  const std::vector<double> schedule{0.0};
  const auto traj = integrate_rank({20.0, 100.0, 0.0}, 25, schedule, p);
  ASSERT_EQ(traj.F.size(), 26U);
  for (std::size_t w = 0; w < traj.F.size(); ++w) {
    EXPECT_EQ(traj.F[w], 20.0);
    EXPECT_NEAR(traj.S[w], 100.0 + 0.6 * static_cast<double>(w), 1e-9);
  }
}

TEST(IntegrateRank, SingleWeekHasTwoRows) {
  const std::vector<double> schedule{1.0};
  const auto traj = integrate_rank({50.0, 1000.0, 1.0}, 1, schedule, RankModelParams{});
  ASSERT_EQ(traj.weeks.size(), 2U);
  EXPECT_EQ(traj.weeks[0], 0);
  EXPECT_EQ(traj.weeks[1], 1);
  EXPECT_NEAR(traj.F[1], 52.0, 1e-12);
  EXPECT_NEAR(traj.S[1], 1003.5, 1e-12);
}

TEST(IntegrateRank, PerWeekSchedule) {
  const std::vector<double> schedule{1.0, 0.0, 2.0};
  const auto traj = integrate_rank({0.0, 100.0, 0.0}, 3, schedule, RankModelParams{});
  EXPECT_NEAR(traj.F[1], 0.2, 1e-12);
  EXPECT_NEAR(traj.F[2], 0.2, 1e-12);
  EXPECT_NEAR(traj.S[2], traj.S[1] + 0.03 * 0.2, 1e-12);
  EXPECT_NEAR(traj.F[3], 0.2 + 0.002 * traj.S[2] * 2.0, 1e-12);
}

TEST(IntegrateRank, ScheduleLengthMismatch) {
  const std::vector<double> schedule{1.0, 1.0};
  EXPECT_THROW((void)integrate_rank({1.0, 1.0, 1.0}, 5, schedule, RankModelParams{}),
               std::invalid_argument);
  const std::vector<double> negative{-1.0};
  EXPECT_THROW((void)integrate_rank({1.0, 1.0, 1.0}, 5, negative, RankModelParams{}),
               std::invalid_argument);
  const std::vector<double> ok{1.0};
  EXPECT_THROW((void)integrate_rank({1.0, 1.0, 1.0}, 0, ok, RankModelParams{}), std::invalid_argument);
  EXPECT_THROW((void)integrate_rank({-1.0, 1.0, 1.0}, 3, ok, RankModelParams{}),
               ratedyn::ValidationError);
}

TEST(RankProxy, KappaOverF) {
  EXPECT_NEAR(*ratedyn::rank_proxy(50.0, 1000.0), 20.0, 1e-12);
  EXPECT_EQ(ratedyn::rank_proxy(1.0, 7.0), 7.0);
  EXPECT_FALSE(ratedyn::rank_proxy(0.5, 1000.0).has_value());
  EXPECT_FALSE(ratedyn::rank_proxy(0.0, 1000.0).has_value());
}

TEST(IntegrateRank, ProxyTracksF) {
  const std::vector<double> schedule{2.0};
  const auto traj = integrate_rank({0.0, 50.0, 2.0}, 10, schedule, RankModelParams{}, 1000.0);
  EXPECT_FALSE(traj.rank_proxy[0].has_value());
  for (std::size_t w = 0; w < traj.F.size(); ++w) {
    if (traj.F[w] >= 1.0) {
      ASSERT_TRUE(traj.rank_proxy[w].has_value());
      EXPECT_NEAR(*traj.rank_proxy[w], 1000.0 / traj.F[w], 1e-12);
    }
  }
}

// With nonnegative inputs, F and S never decrease, dS never shrinks, and
// both are monotone in each coupling constant.
TEST(IntegrateRank, MonotoneCouplingGrid) {
  const std::vector<double> schedule{1.5};
  const double grid[] = {0.0, 0.001, 0.01, 0.05, 0.2};
  for (double a : grid) {
    for (double b : {0.0, 0.5, 1.0, 2.0}) {
      for (double c : grid) {
        const RankModelParams p{a, b, c, 1.0};
        const auto traj = integrate_rank({5.0, 40.0, 1.5}, 25, schedule, p);
        double last_dS = -1.0;
        for (std::size_t w = 1; w < traj.F.size(); ++w) {
          ASSERT_GE(traj.F[w], traj.F[w - 1]);
          ASSERT_GE(traj.S[w], traj.S[w - 1]);
          const double dS = traj.S[w] - traj.S[w - 1];
          ASSERT_GE(dS, last_dS - 1e-12);
          last_dS = dS;
        }
        for (const RankModelParams& bigger :
             {RankModelParams{a + 0.01, b, c, 1.0}, RankModelParams{a, b + 0.5, c, 1.0},
              RankModelParams{a, b, c + 0.01, 1.0}}) {
          const auto more = integrate_rank({5.0, 40.0, 1.5}, 25, schedule, bigger);
          EXPECT_GE(more.F.back(), traj.F.back());
          EXPECT_GE(more.S.back(), traj.S.back());
        }
      }
    }
  }
}

}  // namespace
