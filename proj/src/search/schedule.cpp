// Copyright 2026 The melaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "melaug/search/schedule.hpp"

#include <cmath>

#include "melaug/error.hpp"

namespace melaug::search {

void SearchSchedule::validate() const {
  if (count < 1) throw ConfigError("schedule: count must be >= 1");
  if (!std::isfinite(start)) throw ConfigError("schedule: start must be finite");
  if (kind == ScheduleKind::Arithmetic && !(step_or_ratio > 0.0))
    throw ConfigError("schedule: arithmetic step must be > 0");
  if (kind == ScheduleKind::Geometric && !(step_or_ratio > 1.0))
    throw ConfigError("schedule: geometric ratio must be > 1");
}

std::vector<double> SearchSchedule::points() const {
  validate();
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double v = kind == ScheduleKind::Arithmetic ? start + k * step_or_ratio
                                                      : start * std::pow(step_or_ratio, k);
    out.push_back(std::round(v * 1e9) / 1e9);
  }
  return out;
}

SearchSchedule default_schedule(augment::PolicyKind kind) {
  using augment::PolicyKind;
  switch (kind) {
    case PolicyKind::TimeMask:
    case PolicyKind::FreqMask:
    case PolicyKind::FreqWarp: return {ScheduleKind::Arithmetic, 2.0, 2.0, 8};
    case PolicyKind::TimeWarp:
    case PolicyKind::TimeLenCtl: return {ScheduleKind::Arithmetic, 0.02, 0.02, 8};
    case PolicyKind::LoudnessCtl: return {ScheduleKind::Geometric, 0.02, 2.0, 6};
  }
  return {};
}

std::vector<augment::PolicyParams> schedule_params(augment::PolicyKind kind,
                                                   const SearchSchedule& schedule) {
  using namespace augment;
  std::vector<PolicyParams> out;
  for (double v : schedule.points()) {
    auto as_int = [&] {
      if (v != std::floor(v))
        throw ConfigError("schedule for " + std::string(tag(kind)) + " yields non-integer point " +
                          std::to_string(v));
      return static_cast<int>(v);
    };
    PolicyParams p;
    switch (kind) {
      case PolicyKind::TimeWarp: p = TimeWarp{v}; break;
      case PolicyKind::FreqMask: p = FreqMask{as_int(), 1}; break;
      case PolicyKind::TimeMask: p = TimeMask{as_int(), 1}; break;
      case PolicyKind::FreqWarp: p = FreqWarp{as_int()}; break;
      case PolicyKind::LoudnessCtl: p = LoudnessCtl{v}; break;
      case PolicyKind::TimeLenCtl: p = TimeLenCtl{v}; break;
    }
    validate(p);
    out.push_back(p);
  }
  return out;
}

}  // namespace melaug::search
