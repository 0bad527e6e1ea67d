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

#include <random>
#include <string>

#include "ratedyn/config.hpp"

namespace {

using namespace ratedyn;

std::string message_of(const ConfigFile& file) {
  try {
    (void)resolve_config(file);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

TEST(ParseConfig, SectionsCommentsAndWhitespace) {
  const auto file = parse_config(
      "# scenario\n"
      "[vote]\n"
      "  c = 0.25   \n"
      "# another comment\n"
      "\n"
      "[story]\n"
      "interestingness_r=0.9\n");
  EXPECT_EQ(file.at("vote").at("c"), "0.25");
  EXPECT_EQ(file.at("story").at("interestingness_r"), "0.9");
}

TEST(ParseConfig, MalformedLineNamesLineNumber) {
  try {
    (void)parse_config("[vote]\nc = 0.3\nthis line is wrong\n");
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(ResolveConfig, DefaultsMatchLibraryDefaults) {
  const auto c = resolve_config({});
  EXPECT_EQ(c.vote, VoteModelParams{});
  EXPECT_EQ(c.story, StoryConfig{});
  EXPECT_EQ(c.horizon, 2880.0);
  EXPECT_EQ(std::get<FixedThreshold>(c.policy).h, 40);
}

TEST(ResolveConfig, UnknownKeyIsNamed) {
  ConfigFile file;
  file["vote"]["c_uu"] = "0.3";
  EXPECT_NE(message_of(file).find("vote.c_uu"), std::string::npos);
  ConfigFile section;
  section["votes"]["c"] = "0.3";
  EXPECT_NE(message_of(section).find("votes.c"), std::string::npos);
}

TEST(ResolveConfig, BadValueIsNamed) {
  ConfigFile file;
  file["vote"]["dt"] = "fast";
  EXPECT_NE(message_of(file).find("vote.dt"), std::string::npos);
  ConfigFile out_of_range;
  out_of_range["vote"]["c_u"] = "1";
  EXPECT_NE(message_of(out_of_range).find("c_u must be < 1"), std::string::npos);
  ConfigFile bad_enum;
  bad_enum["policy"]["kind"] = "random";
  EXPECT_NE(message_of(bad_enum).find("policy.kind"), std::string::npos);
}

TEST(ResolveConfig, PolicyThresholdFollowsVoteThreshold) {
  ConfigFile file;
  file["vote"]["threshold_h"] = "55";
  EXPECT_EQ(std::get<FixedThreshold>(resolve_config(file).policy).h, 55);
  file["policy"]["h"] = "60";
  EXPECT_EQ(std::get<FixedThreshold>(resolve_config(file).policy).h, 60);
}

TEST(ResolveConfig, NetworkProportionalPolicy) {
  ConfigFile file;
  file["policy"]["kind"] = "network_proportional";
  file["policy"]["factor"] = "2";
  const auto policy = std::get<NetworkProportional>(resolve_config(file).policy);
  EXPECT_EQ(policy.factor, 2.0);
}

TEST(ResolveConfig, EnumsAndSchedules) {
  ConfigFile file;
  file["vote"]["sm_log_base"] = "e";
  file["vote"]["time_sampling"] = "step_start";
  file["vote"]["channel_voter_friends"] = "false";
  file["ensemble"]["arrivals"] = "mean";
  file["rank"]["weeks"] = "3";
  file["rank"]["M_schedule"] = "1, 2, 0.5";
  const auto c = resolve_config(file);
  EXPECT_EQ(c.vote.sm_log_base, std::numbers::e);
  EXPECT_EQ(c.vote.sampling, TimeSampling::kStepStart);
  EXPECT_FALSE(c.vote.channels.voter_friends);
  EXPECT_EQ(c.arrivals, ArrivalMode::kMean);
  EXPECT_EQ(c.m_schedule, (std::vector<double>{1.0, 2.0, 0.5}));
}

TEST(SetConfigValue, RequiresDottedKey) {
  ConfigFile file;
  set_config_value(file, "story.submitter_network_S", "80");
  EXPECT_EQ(file["story"]["submitter_network_S"], "80");
  EXPECT_THROW(set_config_value(file, "nodot", "1"), ConfigError);
}

TEST(FormatDouble, ShortestRoundTrip) {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 42.0, -7.25, 0.060}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(0.3), "0.3");
}

// Any resolved configuration survives text serialization unchanged.
TEST(ConfigText, RoundTripProperty) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.01, 0.99);
  std::uniform_real_distribution<double> wide(0.0, 500.0);
  for (int i = 0; i < 200; ++i) {
    ConfigFile file;
    set_config_value(file, "vote.c", format_double(unit(rng)));
    set_config_value(file, "vote.c_u", format_double(unit(rng)));
    set_config_value(file, "vote.c_f", format_double(unit(rng)));
    set_config_value(file, "vote.k_u", format_double(unit(rng) / 10.0));
    set_config_value(file, "vote.sm_alpha", format_double(wide(rng)));
    set_config_value(file, "vote.channel_front", rng() % 2 ? "true" : "false");
    set_config_value(file, "story.interestingness_r", format_double(unit(rng)));
    set_config_value(file, "story.submitter_network_S", std::to_string(rng() % 1000));
    if (rng() % 2) {
      set_config_value(file, "policy.kind", "network_proportional");
      set_config_value(file, "policy.factor", format_double(1.0 + unit(rng)));
    }
    set_config_value(file, "rank.a", format_double(unit(rng)));
    set_config_value(file, "user.network_S", format_double(wide(rng)));
    set_config_value(file, "ensemble.seed", std::to_string(rng()));
    set_config_value(file, "ensemble.arrivals", rng() % 2 ? "mean" : "poisson");
    set_config_value(file, "fit.log_base", rng() % 2 ? "10" : "e");
    const auto resolved = resolve_config(file);
    const auto again = resolve_config(parse_config(to_config_text(resolved)));
    ASSERT_EQ(resolved, again) << to_config_text(resolved);
    EXPECT_EQ(to_config_text(again), to_config_text(resolved));
  }
}

}  // namespace
