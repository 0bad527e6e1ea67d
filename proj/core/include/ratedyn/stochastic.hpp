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

#ifndef RATEDYN_STOCHASTIC_HPP
#define RATEDYN_STOCHASTIC_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ratedyn/params.hpp"

/// Agent-level Monte Carlo counterpart of the mean-field vote model.
///
/// Every step, each channel delivers a Poisson number of viewers whose mean is
/// the channel's mean-field rate times dt; each viewer votes independently
/// with probability r. The combined voter network is evaluated on the realized
/// integer vote count.
namespace ratedyn {

enum class ArrivalMode {
  kPoisson,
  kMean,  ///< replace each draw by its expectation; reproduces the mean-field run
};

struct StochasticRunConfig {
  StoryConfig story{};
  VoteModelParams params{};
  PromotionPolicy policy{FixedThreshold{}};
  double horizon = 2880.0;
  std::uint64_t seed = 1;
  int runs = 1;
  ArrivalMode arrivals = ArrivalMode::kPoisson;
};

struct PromotionTimeQuantiles {
  double q10 = 0.0;
  double q50 = 0.0;
  double q90 = 0.0;
};

struct EnsembleSummary {
  std::vector<double> times;
  std::vector<double> mean_votes;
  std::vector<double> std_votes;  ///< sample standard deviation, 0 for a single run
  int runs = 0;
  int promoted_runs = 0;
  double promotion_probability = 0.0;
  std::optional<PromotionTimeQuantiles> promotion_time_quantiles;

  [[nodiscard]] double final_mean() const { return mean_votes.back(); }
  [[nodiscard]] double final_std_error() const;
};

/// splitmix64 finalizer applied to base + (run + 1) * golden-ratio increment.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t run_index);

/// One realization using the RNG stream of run `run_index`.
[[nodiscard]] VoteTrajectory simulate_run(const StochasticRunConfig& config,
                                          std::uint64_t run_index);

/// Run index 0 of the configured seed.
[[nodiscard]] VoteTrajectory simulate_once(const StochasticRunConfig& config);

/// Runs config.runs realizations (seeds from derive_seed) and aggregates them
/// in run-index order. `threads` = 0 picks the hardware concurrency; the
/// result is bit-identical for every thread count.
[[nodiscard]] EnsembleSummary ensemble(const StochasticRunConfig& config, unsigned threads = 0);

}  // namespace ratedyn

#endif  // RATEDYN_STOCHASTIC_HPP
