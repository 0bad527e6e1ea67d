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
#include <filesystem>
#include <fstream>

#include "ratedyn/traces.hpp"
#include "ratedyn/vote_dynamics.hpp"

namespace {

using namespace ratedyn;
namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "ratedyn_traces_test";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

TEST(ParseTraces, WellFormedVoteTrace) {
  const auto records = parse_traces("id,t,value\ns1,0,1\ns1,10,4\ns2,0,1\n", TraceKind::kVote);
  ASSERT_EQ(records.size(), 3U);
  EXPECT_EQ(records[1].id, "s1");
  EXPECT_EQ(records[1].t, 10.0);
  EXPECT_EQ(records[1].value, 4.0);
}

TEST(ParseTraces, DecreasingTimeNamesLine) {
  const std::string text =
      "id,t,value\n"
      "a,0,1\n"
      "a,5,2\n"
      "b,0,1\n"
      "a,9,3\n"
      "b,3,2\n"
      "a,7,4\n";
  try {
    (void)parse_traces(text, TraceKind::kVote);
    FAIL();
  } catch (const TraceError& e) {
    EXPECT_EQ(e.line(), 7);
    EXPECT_NE(std::string(e.what()).find("line 7"), std::string::npos);
  }
}

TEST(ParseTraces, RejectsMalformedInput) {
  EXPECT_THROW((void)parse_traces("", TraceKind::kVote), TraceError);
  EXPECT_THROW((void)parse_traces("id,t,value\n", TraceKind::kVote), TraceError);
  EXPECT_THROW((void)parse_traces("t,value\n1,2\n", TraceKind::kVote), TraceError);
  EXPECT_THROW((void)parse_traces("id,t,value\na,1\n", TraceKind::kVote), TraceError);
  EXPECT_THROW((void)parse_traces("id,t,value\na,x,1\n", TraceKind::kVote), TraceError);
  EXPECT_THROW((void)parse_traces("id,t,value\na,-1,1\n", TraceKind::kVote), TraceError);
  EXPECT_THROW((void)parse_traces("id,t,value\na,1,-1\n", TraceKind::kVote), TraceError);
  EXPECT_THROW((void)parse_traces("id,t,value\nu,1.5,3\n", TraceKind::kRank), TraceError);
  EXPECT_NO_THROW((void)parse_traces("id,t,value\nu,2,3\n", TraceKind::kRank));
}

TEST(IngestTraces, FileErrorsCarryPath) {
  const auto path = scratch("bad.csv");
  write(path, "id,t,value\na,1,oops\n");
  try {
    (void)ingest_traces(path, TraceKind::kVote);
    FAIL();
  } catch (const TraceError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find(path.string()), std::string::npos);
  }
  EXPECT_THROW((void)ingest_traces(scratch("missing.csv"), TraceKind::kVote), InputError);
}

TEST(GroupTraces, FirstAppearanceOrder) {
  const auto records = parse_traces("id,t,value\nz,0,1\na,0,1\nz,1,2\n", TraceKind::kVote);
  const auto groups = group_traces(records);
  ASSERT_EQ(groups.size(), 2U);
  EXPECT_EQ(groups[0].first, "z");
  EXPECT_EQ(groups[0].second.size(), 2U);
  EXPECT_EQ(groups[1].first, "a");
}

TEST(FormatTraces, RoundTrips) {
  const auto records = parse_traces("id,t,value\ns,0,1\ns,0.5,2.25\n", TraceKind::kVote);
  const auto again = parse_traces(format_traces(records), TraceKind::kVote);
  ASSERT_EQ(again.size(), records.size());
  for (std::size_t i = 0; i < again.size(); ++i) {
    EXPECT_EQ(again[i].id, records[i].id);
    EXPECT_EQ(again[i].t, records[i].t);
    EXPECT_EQ(again[i].value, records[i].value);
  }
}

// Model output written as a trace file, read back and fitted.
TEST(TracePipeline, GenerateIngestFitRecoversR) {
  VoteModelParams params;
  const PromotionPolicy policy = FixedThreshold{40};
  std::vector<TraceRecord> records;
  const std::pair<std::string, double> stories[] = {{"dull", 0.12}, {"mid", 0.45}, {"hot", 0.85}};
  for (const auto& [id, r] : stories) {
    const auto traj = integrate_votes({r, 60}, params, policy, 1440.0);
    for (std::size_t i = 0; i < traj.times.size(); i += 15) records.push_back({id, traj.times[i], traj.votes[i]});
  }
  const auto path = scratch("generated.csv");
  write(path, format_traces(records));
  const auto groups = group_traces(ingest_traces(path, TraceKind::kVote));
  ASSERT_EQ(groups.size(), 3U);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const auto fit = fit_interestingness(groups[i].second, 60, params, policy);
    EXPECT_LT(std::abs(fit.r - stories[i].second) / stories[i].second, 0.05) << groups[i].first;
  }
}

TEST(CompareModelToTrace, IdenticalTraceHasZeroError) {
  const auto model = integrate_votes({0.5, 80}, VoteModelParams{}, FixedThreshold{40}, 600.0);
  std::vector<Point> trace;
  for (std::size_t i = 0; i < model.times.size(); i += 20) trace.push_back({model.times[i], model.votes[i]});
  const auto report = compare_model_to_trace(trace, model.times, model.votes, model.promotion_time,
                                             model.promotion_time);
  EXPECT_EQ(report.rms, 0.0);
  EXPECT_EQ(report.overlap_count, trace.size());
  EXPECT_EQ(report.final_value_ratio, 1.0);
  ASSERT_TRUE(report.promotion_time_difference.has_value());
  EXPECT_EQ(*report.promotion_time_difference, 0.0);
}

TEST(CompareModelToTrace, ConstantOffset) {
  const std::vector<double> times{0.0, 1.0, 2.0, 3.0};
  const std::vector<double> values{1.0, 2.0, 4.0, 8.0};
  const std::vector<Point> trace{{0.0, 6.0}, {1.5, 8.0}, {3.0, 13.0}, {9.0, 100.0}};
  const auto report = compare_model_to_trace(trace, times, values);
  EXPECT_NEAR(report.rms, 5.0, 1e-12);
  EXPECT_EQ(report.overlap_count, 3U);
  EXPECT_NEAR(report.final_value_ratio, 13.0 / 8.0, 1e-12);
  EXPECT_FALSE(report.promotion_time_difference.has_value());
}

TEST(CompareModelToTrace, NoOverlap) {
  const std::vector<double> times{0.0, 1.0};
  const std::vector<double> values{1.0, 2.0};
  const std::vector<Point> trace{{5.0, 1.0}};
  EXPECT_THROW((void)compare_model_to_trace(trace, times, values), std::invalid_argument);
}

TEST(ObservedPromotionTime, FirstCrossing) {
  const std::vector<Point> trace{{0.0, 1.0}, {10.0, 30.0}, {20.0, 45.0}, {30.0, 60.0}};
  EXPECT_EQ(observed_promotion_time(trace, 40.0), 20.0);
  EXPECT_FALSE(observed_promotion_time(trace, 100.0).has_value());
}

}  // namespace
