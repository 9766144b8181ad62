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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "melaug/asr/transcriber.hpp"
#include "melaug/augment/params.hpp"
#include "melaug/metrics/mcd.hpp"
#include "melaug/search/live.hpp"
#include "melaug/search/schedule.hpp"
#include "melaug/signal/griffin_lim.hpp"
#include "melaug/types.hpp"

namespace melaug::cli {

/// Every tool setting, with defaults. A config file overrides individual
/// keys; unknown keys are rejected.
///
///   mel.sample_rate mel.n_fft mel.hop mel.n_mels mel.fmin mel.fmax mel.log_floor
///   griffin_lim.iterations
///   search.repeats search.seed search.workers
///   schedule.<tag>.kind (arithmetic|geometric) .start .step .ratio .count
///   transcriber.backend (remote|fixture) .endpoint .fixture_dir .timeout
///     .retries .language .max_in_flight
///   metrics.mcd_order
///   stats.mean_tau stats.nu          (offline report without a manifest)
///   report.dp_decimals
struct ToolConfig {
  MelConfig mel;
  int griffin_lim_iterations = signal::kDefaultGriffinLimIterations;
  std::map<augment::PolicyKind, search::SearchSchedule> schedules;
  int repeats = search::kDefaultRepeats;
  std::optional<std::uint64_t> seed;
  int workers = 1;
  asr::TranscriberConfig transcriber;
  bool transcriber_configured = false;
  int mcd_order = metrics::kDefaultMcdOrder;
  std::optional<double> stats_mean_tau;
  std::optional<int> stats_nu;
  std::optional<int> dp_decimals;

  ToolConfig();
};

/// `key = value` lines; '#' starts a comment line.
ToolConfig parse_config(std::string_view text, const std::string& source);
ToolConfig load_config(const std::filesystem::path& path);

}  // namespace melaug::cli
