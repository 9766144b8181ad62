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

#include <map>
#include <span>
#include <string>
#include <vector>

#include "melaug/asr/transcriber.hpp"
#include "melaug/augment/rng.hpp"
#include "melaug/cli/manifest.hpp"
#include "melaug/metrics/text.hpp"
#include "melaug/search/report.hpp"
#include "melaug/search/schedule.hpp"
#include "melaug/types.hpp"

namespace melaug::search {

inline constexpr int kDefaultRepeats = 10;

struct PreparedUtterance {
  std::string utt_id;
  metrics::Transcript reference;
  MelSpectrogram mel;
};

/// A trial that produced no CER (unreadable audio, augmentation precondition,
/// transcriber failure). Excluded trials never count as deterioration.
struct Exclusion {
  std::string policy;
  std::string param_repr;
  std::string utt_id;
  int repeat = 0;
  std::string reason;
};

struct SearchContext {
  std::vector<PreparedUtterance> utterances;
  DatasetStats stats;
  int griffin_lim_iterations = 60;
  int repeats = kDefaultRepeats;
  augment::AugSeed seed;
  asr::Transcriber* transcriber = nullptr;
  /// Worker threads; results are identical for any value.
  int workers = 1;
  ReportOptions report;
};

/// Reads and extracts every manifest entry; failures go to `excluded`.
std::vector<PreparedUtterance> prepare_utterances(std::span<const cli::ManifestEntry> manifest,
                                                  const MelConfig& cfg,
                                                  std::vector<Exclusion>& excluded);

/// E(tau) and nu over prepared utterances.
DatasetStats compute_stats(std::span<const PreparedUtterance> utterances);

struct Estimate {
  double mean = 0.0;
  std::vector<Measurement> rows;
  std::vector<Exclusion> exclusions;
};

/// Mean CER of Griffin-Lim decoded, unaugmented audio.
Estimate estimate_e_o(const SearchContext& ctx);

/// Mean CER over (utterance, repeat) trials of augmented audio. Each trial
/// draws from substream(seed, utt, policy, param_index, repeat).
Estimate estimate_e_p(const SearchContext& ctx, const augment::PolicyParams& p,
                      int param_index);

struct PolicySearchResult {
  std::vector<DpdRecord> records;
  DpdRecord best;
  std::vector<Measurement> measurements;
  std::vector<Exclusion> exclusions;
};

/// Evaluates every schedule point and picks the maximum DPD.
PolicySearchResult search_policy(augment::PolicyKind kind, const SearchSchedule& schedule,
                                 const SearchContext& ctx, double e_o);

struct TwoStageResult {
  std::vector<DpdRecord> stage1;
  std::vector<DpdRecord> stage2;
  DpdRecord best;
  std::vector<Measurement> measurements;
  std::vector<Exclusion> exclusions;
};

/// Stage 1 searches widths with count 1; stage 2 evaluates every
/// (width, count) whose product equals the stage-1 best width.
TwoStageResult search_masking_two_stage(augment::PolicyKind kind, const SearchSchedule& stage1,
                                        const SearchContext& ctx, double e_o);

struct SearchRun {
  std::vector<Measurement> measurements;
  std::vector<Exclusion> exclusions;
  Report report;
};

/// Baseline plus every requested policy. The report is rebuilt from the raw
/// measurements, so an offline rebuild from the same rows is identical.
SearchRun run_search(const SearchContext& ctx, std::span<const augment::PolicyKind> policies,
                     const std::map<augment::PolicyKind, SearchSchedule>& schedules);

std::string format_exclusions(std::span<const Exclusion> exclusions);

}  // namespace melaug::search
