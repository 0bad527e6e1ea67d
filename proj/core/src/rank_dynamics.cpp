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

#include "ratedyn/rank_dynamics.hpp"

#include <stdexcept>
#include <string>

namespace ratedyn {

UserState step_week(const UserState& state, const RankModelParams& params) {
  const double dt = params.dt_weeks;
  const double dF = params.c_success * state.network_S * state.submission_rate_M * dt;
  const double dS = params.a * state.front_page_F * dt + params.b * dF;
  return {state.front_page_F + dF, state.network_S + dS, state.submission_rate_M};
}

RankTrajectory integrate_rank(const UserState& initial, int weeks,
                              std::span<const double> m_schedule, const RankModelParams& params,
                              double kappa) {
  validate(params);
  validate(initial);
  if (weeks < 1) throw std::invalid_argument("integrate_rank: weeks must be >= 1");
  const auto n = static_cast<std::size_t>(weeks);
  if (m_schedule.size() != 1 && m_schedule.size() != n) {
    throw std::invalid_argument("integrate_rank: schedule has " + std::to_string(m_schedule.size()) +
                                " entries, expected 1 or " + std::to_string(weeks));
  }
  for (double m : m_schedule) {
    if (!(m >= 0.0)) throw std::invalid_argument("integrate_rank: submission rates must be >= 0");
  }

  RankTrajectory out;
  out.weeks.reserve(n + 1);
  out.F.reserve(n + 1);
  out.S.reserve(n + 1);
  out.rank_proxy.reserve(n + 1);
  auto record = [&](int week, const UserState& s) {
    out.weeks.push_back(week);
    out.F.push_back(s.front_page_F);
    out.S.push_back(s.network_S);
    out.rank_proxy.push_back(rank_proxy(s.front_page_F, kappa));
  };

  UserState state = initial;
  record(0, state);
  for (std::size_t w = 0; w < n; ++w) {
    state.submission_rate_M = m_schedule.size() == 1 ? m_schedule[0] : m_schedule[w];
    state = step_week(state, params);
    record(static_cast<int>(w + 1), state);
  }
  return out;
}

std::optional<double> rank_proxy(double F, double kappa) {
  if (!(F >= 1.0)) return std::nullopt;
  return kappa / F;
}

}  // namespace ratedyn
