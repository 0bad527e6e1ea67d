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

#include "ratedyn/traces.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ratedyn {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) return std::nullopt;
  return value;
}

double interpolate(std::span<const double> times, std::span<const double> values, double t) {
  if (t <= times.front()) return values.front();
  if (t >= times.back()) return values.back();
  const auto it = std::upper_bound(times.begin(), times.end(), t);
  const auto hi = static_cast<std::size_t>(it - times.begin());
  const auto lo = hi - 1;
  const double w = (t - times[lo]) / (times[hi] - times[lo]);
  return values[lo] + w * (values[hi] - values[lo]);
}

}  // namespace

TraceError::TraceError(int line, std::string detail, const std::string& source)
    : InputError((source.empty() ? "" : source + ": ") + "line " + std::to_string(line) + ": " + detail),
      line_(line),
      detail_(std::move(detail)) {}

std::vector<TraceRecord> parse_traces(std::string_view text, TraceKind kind) {
  std::vector<TraceRecord> out;
  std::map<std::string, double, std::less<>> last_time;
  int line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = trim(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (!header_seen) {
      if (line != "id,t,value") throw TraceError(line_no, "expected header 'id,t,value'");
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      fields.push_back(trim(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (fields.size() != 3)
      throw TraceError(line_no, "expected 3 fields, got " + std::to_string(fields.size()));
    if (fields[0].empty()) throw TraceError(line_no, "empty id");
    const auto t = parse_number(fields[1]);
    const auto value = parse_number(fields[2]);
    if (!t) throw TraceError(line_no, "time stamp is not a number");
    if (!value) throw TraceError(line_no, "value is not a number");
    if (*t < 0.0) throw TraceError(line_no, "time stamp must be >= 0");
    if (*value < 0.0) throw TraceError(line_no, "count must be >= 0");
    if (kind == TraceKind::kRank && *t != std::floor(*t))
      throw TraceError(line_no, "rank traces need integer week indices");

    const auto it = last_time.find(fields[0]);
    if (it != last_time.end()) {
      if (*t < it->second)
        throw TraceError(line_no, "time stamp decreases for id '" + std::string(fields[0]) + "'");
      it->second = *t;
    } else {
      last_time.emplace(std::string(fields[0]), *t);
    }
    out.push_back({std::string(fields[0]), *t, *value});
  }
  if (!header_seen) throw TraceError(1, "empty trace file");
  if (out.empty()) throw TraceError(line_no, "trace file has no records");
  return out;
}

std::vector<TraceRecord> ingest_traces(const std::filesystem::path& path, TraceKind kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read trace file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_traces(buffer.str(), kind);
  } catch (const TraceError& e) {
    throw TraceError(e.line(), e.detail(), path.string());
  }
}

std::vector<std::pair<std::string, std::vector<Point>>> group_traces(
    std::span<const TraceRecord> records) {
  std::vector<std::pair<std::string, std::vector<Point>>> out;
  std::map<std::string, std::size_t, std::less<>> index;
  for (const auto& r : records) {
    auto [it, inserted] = index.emplace(r.id, out.size());
    if (inserted) out.emplace_back(r.id, std::vector<Point>{});
    out[it->second].second.push_back({r.t, r.value});
  }
  return out;
}

std::string format_traces(std::span<const TraceRecord> records) {
  std::string out = "id,t,value\n";
  for (const auto& r : records) {
    out += r.id + "," + format_double(r.t) + "," + format_double(r.value) + "\n";
  }
  return out;
}

GoodnessReport compare_model_to_trace(std::span<const Point> trace,
                                      std::span<const double> model_times,
                                      std::span<const double> model_values,
                                      std::optional<double> trace_promotion_time,
                                      std::optional<double> model_promotion_time) {
  if (model_times.empty() || model_times.size() != model_values.size())
    throw std::invalid_argument("compare_model_to_trace: malformed model series");
  const double t0 = model_times.front();
  const double t1 = model_times.back();

  GoodnessReport report;
  double sum_sq = 0.0;
  const Point* last = nullptr;
  for (const auto& p : trace) {
    if (p.x < t0 || p.x > t1) continue;
    const double e = p.y - interpolate(model_times, model_values, p.x);
    sum_sq += e * e;
    ++report.overlap_count;
    last = &p;
  }
  if (report.overlap_count == 0)
    throw std::invalid_argument("compare_model_to_trace: trace and model do not overlap in time");
  report.rms = std::sqrt(sum_sq / static_cast<double>(report.overlap_count));
  const double model_last = interpolate(model_times, model_values, last->x);
  report.final_value_ratio = model_last != 0.0 ? last->y / model_last
                                               : std::numeric_limits<double>::quiet_NaN();
  if (trace_promotion_time && model_promotion_time)
    report.promotion_time_difference = *trace_promotion_time - *model_promotion_time;
  return report;
}

std::optional<double> observed_promotion_time(std::span<const Point> trace, double threshold) {
  for (const auto& p : trace) {
    if (p.y >= threshold) return p.x;
  }
  return std::nullopt;
}

}  // namespace ratedyn
