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

#include "ratedyn/stochastic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "ratedyn/vote_dynamics.hpp"

namespace ratedyn {

namespace {

// Runs per aggregation block. Fixed so that the summation order never depends
// on the thread count.
constexpr std::size_t kBlockRuns = 64;

std::int64_t draw_votes(std::mt19937_64& rng, double mean_viewers, double r) {
  if (mean_viewers <= 0.0 || r <= 0.0) return 0;
  std::poisson_distribution<std::int64_t> arrivals(mean_viewers);
  const std::int64_t viewers = arrivals(rng);
  if (viewers == 0) return 0;
  if (r >= 1.0) return viewers;
  std::binomial_distribution<std::int64_t> voters(viewers, r);
  return voters(rng);
}

// Linear-interpolation quantile of sorted data.
double quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

void check_config(const StochasticRunConfig& config) {
  validate(config.story);
  validate(config.params);
  validate(config.policy);
  if (!(config.horizon >= config.params.dt))
    throw std::invalid_argument("stochastic run: horizon must be >= dt");
}

}  // namespace

double EnsembleSummary::final_std_error() const {
  return runs > 0 ? std_votes.back() / std::sqrt(static_cast<double>(runs)) : 0.0;
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t run_index) {
  std::uint64_t z = base_seed + (run_index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

VoteTrajectory simulate_run(const StochasticRunConfig& config, std::uint64_t run_index) {
  check_config(config);
  const auto& params = config.params;
  const auto& story = config.story;
  const double dt = params.dt;

  std::mt19937_64 rng(derive_seed(config.seed, run_index));
  const auto steps = static_cast<std::size_t>(std::floor(config.horizon / dt + 1e-9));
  const double threshold = promotion_threshold_for(config.policy, story);
  const double r = story.interestingness_r;
  const double offset = params.sampling == TimeSampling::kMidpoint ? 0.5 * dt : 0.0;
  const bool sampled = config.arrivals == ArrivalMode::kPoisson;

  VoteTrajectory out;
  out.times.reserve(steps + 1);
  out.votes.reserve(steps + 1);
  // Integer-valued in Poisson mode; doubles hold such counts exactly.
  double m = 1.0;
  out.times.push_back(0.0);
  out.votes.push_back(m);
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = static_cast<double>(i) * dt;
    const auto v = visibility(t + offset, m, story, out.promotion_time, params);
    double dm = 0.0;
    if (sampled) {
      // Fixed channel order keeps the RNG stream layout stable.
      std::int64_t votes = 0;
      votes += draw_votes(rng, v.v_front * dt, r);
      votes += draw_votes(rng, v.v_upcoming * dt, r);
      votes += draw_votes(rng, v.v_submitter_friends * dt, r);
      votes += draw_votes(rng, v.v_voter_friends * dt, r);
      dm = static_cast<double>(votes);
    } else {
      dm = r * v.total() * dt;
    }
    m += dm;
    const double t_next = static_cast<double>(i + 1) * dt;
    if (!out.promotion_time && m >= threshold) out.promotion_time = t_next;
    out.times.push_back(t_next);
    out.votes.push_back(m);
  }
  return out;
}

VoteTrajectory simulate_once(const StochasticRunConfig& config) { return simulate_run(config, 0); }

EnsembleSummary ensemble(const StochasticRunConfig& config, unsigned threads) {
  if (config.runs < 1) throw std::invalid_argument("ensemble: runs must be >= 1");
  check_config(config);
  const auto runs = static_cast<std::size_t>(config.runs);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());

  EnsembleSummary out;
  out.runs = config.runs;
  std::vector<double> m2;  // Welford sums of squared deviations
  std::vector<double> promotion_times;
  std::vector<VoteTrajectory> block(std::min(kBlockRuns, runs));
  std::size_t seen = 0;

  for (std::size_t first = 0; first < runs; first += kBlockRuns) {
    const std::size_t count = std::min(kBlockRuns, runs - first);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t j = next++; j < count; j = next++) block[j] = simulate_run(config, first + j);
    };
    const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(count));
    if (workers <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }

    for (std::size_t j = 0; j < count; ++j) {
      const auto& traj = block[j];
      if (seen == 0) {
        out.times = traj.times;
        out.mean_votes.assign(traj.votes.size(), 0.0);
        m2.assign(traj.votes.size(), 0.0);
      }
      ++seen;
      const double n = static_cast<double>(seen);
      for (std::size_t k = 0; k < traj.votes.size(); ++k) {
        const double delta = traj.votes[k] - out.mean_votes[k];
        out.mean_votes[k] += delta / n;
        m2[k] += delta * (traj.votes[k] - out.mean_votes[k]);
      }
      if (traj.promotion_time) promotion_times.push_back(*traj.promotion_time);
    }
  }

  out.std_votes.resize(m2.size());
  for (std::size_t k = 0; k < m2.size(); ++k) {
    out.std_votes[k] = runs > 1 ? std::sqrt(m2[k] / static_cast<double>(runs - 1)) : 0.0;
  }
  out.promoted_runs = static_cast<int>(promotion_times.size());
  out.promotion_probability = static_cast<double>(promotion_times.size()) / static_cast<double>(runs);
  if (!promotion_times.empty()) {
    std::sort(promotion_times.begin(), promotion_times.end());
    out.promotion_time_quantiles = PromotionTimeQuantiles{quantile(promotion_times, 0.1),
                                                          quantile(promotion_times, 0.5),
                                                          quantile(promotion_times, 0.9)};
  }
  return out;
}

}  // namespace ratedyn
