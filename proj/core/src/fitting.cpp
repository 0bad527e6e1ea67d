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

#include "ratedyn/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ratedyn/vote_dynamics.hpp"

namespace ratedyn {

namespace {

double log_in_base(double x, double base) {
  return base == std::numbers::e ? std::log(x) : std::log(x) / std::log(base);
}

// Linear interpolation of (times, values) at t; times strictly increasing.
double interpolate(const std::vector<double>& times, const std::vector<double>& values, double t) {
  if (t <= times.front()) return values.front();
  if (t >= times.back()) return values.back();
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  const auto hi = static_cast<std::size_t>(it - times.begin());
  const auto lo = hi - 1;
  const double w = (t - times[lo]) / (times[hi] - times[lo]);
  return values[lo] + w * (values[hi] - values[lo]);
}

}  // namespace

LinearFit fit_linear(std::span<const Point> points, bool through_origin) {
  const std::size_t n = points.size();
  if (n < 2) throw std::invalid_argument("fit_linear: need at least 2 points, got " + std::to_string(n));
  for (const auto& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw std::invalid_argument("fit_linear: non-finite point");
  }
  const bool all_equal = std::all_of(points.begin(), points.end(),
                                     [&](const Point& p) { return p.x == points.front().x; });
  if (all_equal) throw std::invalid_argument("fit_linear: degenerate abscissae (all x equal)");

  LinearFit fit;
  fit.count = n;
  const double count = static_cast<double>(n);
  if (through_origin) {
    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto& p : points) {
      sxx += p.x * p.x;
      sxy += p.x * p.y;
    }
    fit.slope = sxy / sxx;
    fit.intercept = 0.0;
    for (const auto& p : points) {
      const double e = p.y - fit.slope * p.x;
      fit.rss += e * e;
    }
    fit.slope_stderr = std::sqrt(fit.rss / (count - 1.0) / sxx);
    return fit;
  }

  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& p : points) {
    mean_x += p.x;
    mean_y += p.y;
  }
  mean_x /= count;
  mean_y /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& p : points) {
    sxx += (p.x - mean_x) * (p.x - mean_x);
    sxy += (p.x - mean_x) * (p.y - mean_y);
  }
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  for (const auto& p : points) {
    const double e = p.y - (fit.slope * p.x + fit.intercept);
    fit.rss += e * e;
  }
  fit.slope_stderr = n > 2 ? std::sqrt(fit.rss / (count - 2.0) / sxx) : 0.0;
  return fit;
}

LogFit fit_log(std::span<const Point> points, double log_base) {
  if (!(log_base > 0.0) || log_base == 1.0 || !std::isfinite(log_base))
    throw std::invalid_argument("fit_log: log_base must be > 0 and != 1");
  std::vector<Point> transformed;
  transformed.reserve(points.size());
  for (const auto& p : points) {
    if (!(p.x >= 1.0)) throw std::invalid_argument("fit_log: every x must be >= 1");
    transformed.push_back({log_in_base(p.x, log_base), p.y});
  }
  const auto lin = fit_linear(transformed);
  return {lin.slope, lin.intercept, log_base, lin.rss, lin.count};
}

double binomial_pmf(std::int64_t k, std::int64_t n, double p) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("binomial_pmf: need 0 <= k <= n");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binomial_pmf: need 0 <= p <= 1");
  if (p == 0.0) return k == 0 ? 1.0 : 0.0;
  if (p == 1.0) return k == n ? 1.0 : 0.0;
  const auto kd = static_cast<double>(k);
  const auto nd = static_cast<double>(n);
  const double log_choose = std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(nd - kd + 1.0);
  return std::exp(log_choose + kd * std::log(p) + (nd - kd) * std::log1p(-p));
}

double chance_probability(const FriendVoteObservation& obs, ChanceMode mode) {
  validate(obs);
  const double p = static_cast<double>(obs.group_K) / static_cast<double>(obs.pool_N);
  if (mode == ChanceMode::kExact) return binomial_pmf(obs.overlap_k, obs.sample_n, p);
  if (obs.overlap_k == 0) return 1.0;
  // Smallest terms first.
  double tail = 0.0;
  for (std::int64_t j = obs.sample_n; j >= obs.overlap_k; --j) tail += binomial_pmf(j, obs.sample_n, p);
  return std::min(tail, 1.0);
}

double average_chance_probability(std::span<const FriendVoteObservation> stories, ChanceMode mode) {
  if (stories.empty()) throw std::invalid_argument("average_chance_probability: no stories");
  double sum = 0.0;
  for (const auto& obs : stories) sum += chance_probability(obs, mode);
  return sum / static_cast<double>(stories.size());
}

std::vector<SuccessBin> success_rate_series(std::span<const UserRecord> users,
                                            const SuccessRateOptions& options) {
  if (options.bins < 1) throw std::invalid_argument("success_rate_series: bins must be >= 1");
  std::vector<UserRecord> kept;
  for (const auto& u : users) {
    if (u.submissions > 0.0 && u.submissions >= options.min_submissions) kept.push_back(u);
  }
  if (kept.empty()) throw std::invalid_argument("success_rate_series: no users left after filtering");

  const auto [lo_it, hi_it] = std::minmax_element(
      kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.network_S < b.network_S; });
  const double s_min = lo_it->network_S;
  const double s_max = hi_it->network_S;
  const double width = (s_max - s_min) / options.bins;

  struct Acc {
    double sum_S = 0.0, sum = 0.0, sum_sq = 0.0;
    std::size_t n = 0;
  };
  std::vector<Acc> acc(static_cast<std::size_t>(options.bins));
  for (const auto& u : kept) {
    std::size_t idx = 0;
    if (width > 0.0) {
      idx = std::min(static_cast<std::size_t>((u.network_S - s_min) / width), acc.size() - 1);
    }
    const double success = u.front_page_F / u.submissions;
    auto& a = acc[idx];
    a.sum_S += u.network_S;
    a.sum += success;
    a.sum_sq += success * success;
    ++a.n;
  }

  std::vector<SuccessBin> out;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    const auto& a = acc[i];
    if (a.n == 0) continue;
    const double n = static_cast<double>(a.n);
    SuccessBin bin;
    bin.s_low = s_min + width * static_cast<double>(i);
    bin.s_high = width > 0.0 ? bin.s_low + width : s_max;
    bin.mean_S = a.sum_S / n;
    bin.mean_success = a.sum / n;
    if (a.n > 1) {
      const double var = std::max(0.0, (a.sum_sq - n * bin.mean_success * bin.mean_success) / (n - 1.0));
      bin.stderr_success = std::sqrt(var / n);
    }
    bin.count = a.n;
    out.push_back(bin);
  }
  return out;
}

InterestingnessFit fit_interestingness(std::span<const Point> trace,
                                       std::int64_t submitter_network_S,
                                       const VoteModelParams& params,
                                       const PromotionPolicy& policy) {
  validate(params);
  validate(policy);
  const StoryConfig probe{0.0, submitter_network_S};
  validate(probe);
  const double threshold = promotion_threshold_for(policy, probe);

  std::vector<Point> segment;
  for (const auto& p : trace) {
    if (p.y >= threshold) break;
    if (p.x >= 0.0) segment.push_back(p);
  }
  if (segment.empty()) throw std::invalid_argument("fit_interestingness: no pre-promotion samples");
  const double horizon = std::max(params.dt, segment.back().x);

  auto rss_at = [&](double r) {
    const auto traj = integrate_votes({r, submitter_network_S}, params, policy, horizon);
    double rss = 0.0;
    for (const auto& p : segment) {
      const double e = p.y - interpolate(traj.times, traj.votes, p.x);
      rss += e * e;
    }
    return rss;
  };

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0;
  double hi = 1.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = rss_at(x1);
  double f2 = rss_at(x2);
  while (hi - lo > 1e-7) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = rss_at(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = rss_at(x2);
    }
  }
  const double r = 0.5 * (lo + hi);
  return {r, rss_at(r), segment.size()};
}

}  // namespace ratedyn
