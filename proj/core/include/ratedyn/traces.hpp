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

#ifndef RATEDYN_TRACES_HPP
#define RATEDYN_TRACES_HPP

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ratedyn/config.hpp"
#include "ratedyn/fitting.hpp"

/// Empirical trace files (CSV, header `id,t,value`) and model/data comparison.
namespace ratedyn {

enum class TraceKind {
  kVote,  ///< t in minutes since submission, value = votes
  kRank,  ///< t = integer week index, value = F or S
};

struct TraceRecord {
  std::string id;
  double t = 0.0;
  double value = 0.0;
};

/// Schema violation in a trace file; `line()` is 1-based, header = line 1.
class TraceError : public InputError {
 public:
  TraceError(int line, std::string detail, const std::string& source = {});
  [[nodiscard]] int line() const noexcept { return line_; }
  [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

 private:
  int line_;
  std::string detail_;
};

[[nodiscard]] std::vector<TraceRecord> parse_traces(std::string_view text, TraceKind kind);

/// Reads and validates a trace file. Time stamps must be nondecreasing per id.
[[nodiscard]] std::vector<TraceRecord> ingest_traces(const std::filesystem::path& path, TraceKind kind);

/// Groups records by id in order of first appearance, as (t, value) points.
[[nodiscard]] std::vector<std::pair<std::string, std::vector<Point>>> group_traces(
    std::span<const TraceRecord> records);

/// CSV text for `records` in the ingest schema.
[[nodiscard]] std::string format_traces(std::span<const TraceRecord> records);

struct GoodnessReport {
  std::size_t overlap_count = 0;
  double rms = 0.0;
  std::optional<double> promotion_time_difference;  ///< trace minus model
  double final_value_ratio = 0.0;                   ///< trace / model at the last overlapping time
};

/// Compares trace samples inside the model's time range with the model
/// (linearly interpolated). Throws std::invalid_argument if no sample overlaps.
[[nodiscard]] GoodnessReport compare_model_to_trace(std::span<const Point> trace,
                                                    std::span<const double> model_times,
                                                    std::span<const double> model_values,
                                                    std::optional<double> trace_promotion_time = {},
                                                    std::optional<double> model_promotion_time = {});

/// First sample time at which the observed value reaches `threshold`.
[[nodiscard]] std::optional<double> observed_promotion_time(std::span<const Point> trace,
                                                            double threshold);

}  // namespace ratedyn

#endif  // RATEDYN_TRACES_HPP
