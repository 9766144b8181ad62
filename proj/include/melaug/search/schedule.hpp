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

#pragma once

#include <vector>

#include "melaug/augment/params.hpp"

namespace melaug::search {

enum class ScheduleKind { Arithmetic, Geometric };

/// Parameter sequence for one policy: start + k*step, or start * ratio^k,
/// for k = 0..count-1.
struct SearchSchedule {
  ScheduleKind kind = ScheduleKind::Arithmetic;
  double start = 0.0;
  double step_or_ratio = 1.0;
  int count = 1;

  void validate() const;
  /// Points rounded to 1e-9 so decimal grids print cleanly (0.06, not
  /// 0.06000000000000001).
  std::vector<double> points() const;
};

/// Arithmetic 2..16 step 2 for T, F, H; 0.02..0.16 step 0.02 for W, L;
/// geometric 0.02 * 2^k, k = 0..5, for Lambda.
SearchSchedule default_schedule(augment::PolicyKind kind);

/// Schedule points as parameter sets. Masks use a count of 1; integer
/// policies reject non-integer points.
std::vector<augment::PolicyParams> schedule_params(augment::PolicyKind kind,
                                                   const SearchSchedule& schedule);

}  // namespace melaug::search
