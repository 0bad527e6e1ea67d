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

#ifndef RATEDYN_RANK_DYNAMICS_HPP
#define RATEDYN_RANK_DYNAMICS_HPP

#include <optional>
#include <span>
#include <vector>

#include "ratedyn/params.hpp"

/// Weekly co-evolution of a user's front-page count F and reverse-friend
/// network S:
///
///     dF = c * S * M * dt
///     dS = a * F * dt + b * dF
namespace ratedyn {

struct RankTrajectory {
  std::vector<int> weeks;
  std::vector<double> F;
  std::vector<double> S;
  std::vector<std::optional<double>> rank_proxy;  ///< nullopt = unranked
};

/// One synchronous step: dF from pre-step S, the organic term from pre-step F,
/// and the promotion term from this step's dF. M is taken from `state`.
[[nodiscard]] UserState step_week(const UserState& state, const RankModelParams& params);

/// Iterates step_week for `weeks` steps. `m_schedule` holds one submission
/// rate per week, or a single value applied to every week; anything else
/// throws std::invalid_argument. The trajectory has weeks + 1 entries.
[[nodiscard]] RankTrajectory integrate_rank(const UserState& initial, int weeks,
                                            std::span<const double> m_schedule,
                                            const RankModelParams& params, double kappa = 1.0);

/// rank ~ kappa / F; users with fewer than one front-page story are unranked.
[[nodiscard]] std::optional<double> rank_proxy(double F, double kappa);

}  // namespace ratedyn

#endif  // RATEDYN_RANK_DYNAMICS_HPP
