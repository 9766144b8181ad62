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

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "melaug/search/dpd.hpp"
#include "melaug/search/measurements.hpp"

namespace melaug::search {

struct ReportOptions {
  /// Round D_p to this many decimals before computing DPD. Reproducing
  /// published tables computed from 3-decimal figures needs 3; live searches
  /// leave it unset.
  std::optional<int> dp_decimals;
  /// Restrict the report to these policies; empty means all present.
  std::vector<PolicyKind> policies;
};

struct Report {
  double e_o = 0.0;
  std::vector<DpdRecord> records;
  std::vector<std::string> notes;
};

/// Mean of per-trial CERs, reduced in (utt_id, repeat) order with
/// compensated summation so the result does not depend on row order.
double mean_cer(std::span<const Measurement> trials);

/// Aggregates one policy's measurements into DPD records. Masking policies
/// get two stages: count==1 rows (stage 1) pick the best width w*, then every
/// (width, count) with width*count == w* forms stage 2. Rows outside both
/// stages are reported in `notes` and dropped.
std::vector<DpdRecord> policy_records(PolicyKind kind, std::span<const Measurement> rows,
                                      const DatasetStats& stats, double e_o,
                                      const ReportOptions& options,
                                      std::vector<std::string>* notes = nullptr);

/// Full report: E_o from baseline rows, then every policy in table order.
Report build_report(std::span<const Measurement> rows, const DatasetStats& stats,
                    const ReportOptions& options);

/// TSV columns: policy  param_repr  d_p  e_p  e_o  dpd  selected  infinite_flag.
/// Stage-2 masking rows carry the policy tag suffixed with "_pairs".
std::string format_report(const Report& report);
void write_report(const std::filesystem::path& path, const Report& report);

std::string report_policy_label(const DpdRecord& r);

}  // namespace melaug::search
