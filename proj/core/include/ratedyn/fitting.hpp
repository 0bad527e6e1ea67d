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

#ifndef RATEDYN_FITTING_HPP
#define RATEDYN_FITTING_HPP

#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "ratedyn/params.hpp"

/// Least-squares parameter extraction and the binomial chance probability for
/// friends among a story's voters.
namespace ratedyn {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rss = 0.0;
  std::size_t count = 0;
  double slope_stderr = 0.0;  ///< from the residual variance; 0 when the fit is exact
};

/// y = alpha * log_base(x) + beta.
struct LogFit {
  double alpha = 0.0;
  double beta = 0.0;
  double log_base = std::numbers::e;
  double rss = 0.0;
  std::size_t count = 0;
};

/// Ordinary least squares. With `through_origin` the intercept is fixed at 0.
/// Throws std::invalid_argument for fewer than two points, non-finite input,
/// or all-equal abscissae.
[[nodiscard]] LinearFit fit_linear(std::span<const Point> points, bool through_origin = false);

/// Least squares of y on log_base(x). Requires every x >= 1.
[[nodiscard]] LogFit fit_log(std::span<const Point> points, double log_base = std::numbers::e);

/// C(n, k) p^k (1 - p)^(n - k), evaluated in log space via lgamma.
/// Throws std::invalid_argument unless 0 <= k <= n and 0 <= p <= 1.
[[nodiscard]] double binomial_pmf(std::int64_t k, std::int64_t n, double p);

enum class ChanceMode {
  kExact,        ///< P(exactly k friends among the sample)
  kTailAtLeast,  ///< P(at least k friends among the sample)
};

/// Probability of drawing the observed overlap when sampling `sample_n` voters
/// from the pool, with p = group_K / pool_N.
[[nodiscard]] double chance_probability(const FriendVoteObservation& obs, ChanceMode mode);

/// Mean of chance_probability over stories. Throws on an empty list.
[[nodiscard]] double average_chance_probability(std::span<const FriendVoteObservation> stories,
                                                ChanceMode mode);

struct UserRecord {
  double submissions = 0.0;
  double front_page_F = 0.0;
  double network_S = 0.0;
};

struct SuccessBin {
  double s_low = 0.0;
  double s_high = 0.0;
  double mean_S = 0.0;
  double mean_success = 0.0;
  double stderr_success = 0.0;  ///< 0 for single-member bins
  std::size_t count = 0;
};

struct SuccessRateOptions {
  int bins = 10;
  double min_submissions = 50.0;
};

/// Success rate F / submissions binned into equal-width bins over the
/// observed range of S; empty bins are dropped. Users below
/// `min_submissions` are excluded. Throws std::invalid_argument if nobody
/// remains.
[[nodiscard]] std::vector<SuccessBin> success_rate_series(std::span<const UserRecord> users,
                                                          const SuccessRateOptions& options = {});

/// Least-squares estimate of a story's interestingness from an observed vote
/// series, using only samples before the observed promotion (votes below the
/// policy threshold). The model is integrate_votes with the given story
/// network, params and policy. Golden-section search on [0, 1].
struct InterestingnessFit {
  double r = 0.0;
  double rss = 0.0;
  std::size_t count = 0;
};

[[nodiscard]] InterestingnessFit fit_interestingness(std::span<const Point> trace,
                                                     std::int64_t submitter_network_S,
                                                     const VoteModelParams& params,
                                                     const PromotionPolicy& policy);

}  // namespace ratedyn

#endif  // RATEDYN_FITTING_HPP
