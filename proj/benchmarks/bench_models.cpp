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


#include <benchmark/benchmark.h>

#include <vector>

#include "ratedyn/fitting.hpp"
#include "ratedyn/rank_dynamics.hpp"
#include "ratedyn/stochastic.hpp"
#include "ratedyn/vote_dynamics.hpp"

namespace {

using namespace ratedyn;

void BM_IntegrateVotes(benchmark::State& state) {
  const StoryConfig story{0.5, state.range(0)};
  const VoteModelParams params;
  for (auto _ : state) {
    auto traj = integrate_votes(story, params, FixedThreshold{40}, 2880.0);
    benchmark::DoNotOptimize(traj.votes.data());
  }
  state.SetItemsProcessed(state.iterations() * 2880);
}
BENCHMARK(BM_IntegrateVotes)->Arg(0)->Arg(80)->Arg(400);

void BM_SimulateRun(benchmark::State& state) {
  StochasticRunConfig config;
  config.story = {0.5, 80};
  std::uint64_t run = 0;
  for (auto _ : state) {
    auto traj = simulate_run(config, run++);
    benchmark::DoNotOptimize(traj.votes.data());
  }
}
BENCHMARK(BM_SimulateRun);

void BM_Ensemble(benchmark::State& state) {
  StochasticRunConfig config;
  config.story = {0.5, 80};
  config.runs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto summary = ensemble(config);
    benchmark::DoNotOptimize(summary.mean_votes.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Ensemble)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_IntegrateRank(benchmark::State& state) {
  const std::vector<double> schedule{2.0};
  for (auto _ : state) {
    auto traj = integrate_rank({10.0, 100.0, 2.0}, static_cast<int>(state.range(0)), schedule,
                               RankModelParams{}, 1000.0);
    benchmark::DoNotOptimize(traj.F.data());
  }
}
BENCHMARK(BM_IntegrateRank)->Arg(25)->Arg(520);

void BM_BinomialPmf(benchmark::State& state) {
  const double p = 300.0 / 15742.0;
  for (auto _ : state) {
    double sum = 0.0;
    for (std::int64_t k = 0; k <= 215; ++k) sum += binomial_pmf(k, 215, p);
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() * 216);
}
BENCHMARK(BM_BinomialPmf);

void BM_TailProbability(benchmark::State& state) {
  const FriendVoteObservation obs{15742, 215, 300, 4};
  for (auto _ : state) benchmark::DoNotOptimize(chance_probability(obs, ChanceMode::kTailAtLeast));
}
BENCHMARK(BM_TailProbability);

void BM_FitInterestingness(benchmark::State& state) {
  VoteModelParams params;
  const auto traj = integrate_votes({0.4, 80}, params, FixedThreshold{40}, 600.0);
  std::vector<Point> trace;
  for (std::size_t i = 0; i < traj.times.size(); i += 10) trace.push_back({traj.times[i], traj.votes[i]});
  for (auto _ : state) benchmark::DoNotOptimize(fit_interestingness(trace, 80, params, FixedThreshold{40}));
}
BENCHMARK(BM_FitInterestingness)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
