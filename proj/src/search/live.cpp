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

#include "melaug/search/live.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <thread>

#include <fmt/format.h>

#include "melaug/augment/policies.hpp"
#include "melaug/error.hpp"
#include "melaug/metrics/text.hpp"
#include "melaug/signal/griffin_lim.hpp"
#include "melaug/signal/mel.hpp"
#include "melaug/signal/wav.hpp"

namespace melaug::search {
namespace {

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  const auto count = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
  for (std::size_t w = 0; w < count; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
}

struct Trial {
  std::size_t utterance = 0;
  int repeat = 0;
  std::optional<double> cer;
  std::string failure;
};

void require_ready(const SearchContext& ctx) {
  if (ctx.utterances.empty()) throw UsageError("search: no utterances");
  if (!ctx.transcriber) throw UsageError("search: no transcriber");
  if (ctx.repeats < 1) throw ConfigError("search: repeats must be >= 1");
  if (ctx.griffin_lim_iterations < 1) throw ConfigError("search: griffin-lim iterations must be >= 1");
}

Estimate collect(std::vector<Trial>& trials, const SearchContext& ctx, const std::string& policy,
                 int param_index, const std::string& repr) {
  Estimate est;
  for (const auto& t : trials) {
    const auto& utt = ctx.utterances[t.utterance];
    if (t.cer) {
      est.rows.push_back({policy, param_index, repr, utt.utt_id, t.repeat, *t.cer, 0});
    } else {
      est.exclusions.push_back({policy, repr, utt.utt_id, t.repeat, t.failure});
    }
  }
  if (est.rows.empty())
    throw Error(fmt::format("search: every trial failed for {} {}; first failure: {}", policy,
                            repr, est.exclusions.front().reason));
  est.mean = mean_cer(est.rows);
  return est;
}

double score(const SearchContext& ctx, const PreparedUtterance& utt, const MelSpectrogram& mel,
             const std::string& key) {
  const Waveform audio = signal::griffin_lim(mel, ctx.griffin_lim_iterations);
  const auto hyp = ctx.transcriber->transcribe(audio, key);
  return metrics::cer(hyp, utt.reference);
}

std::vector<DpdRecord> records_for(augment::PolicyKind kind, std::span<const Measurement> rows,
                                   const SearchContext& ctx, double e_o) {
  return policy_records(kind, rows, ctx.stats, e_o, ctx.report);
}

void append(std::vector<Measurement>& rows, std::vector<Exclusion>& excl, Estimate&& est) {
  rows.insert(rows.end(), est.rows.begin(), est.rows.end());
  excl.insert(excl.end(), est.exclusions.begin(), est.exclusions.end());
}

}  // namespace

std::vector<PreparedUtterance> prepare_utterances(std::span<const cli::ManifestEntry> manifest,
                                                  const MelConfig& cfg,
                                                  std::vector<Exclusion>& excluded) {
  const auto fb = signal::make_filterbank(cfg);
  std::vector<PreparedUtterance> out;
  for (const auto& e : manifest) {
    try {
      const Waveform w = signal::load_wav(e.audio_path);
      out.push_back({e.utt_id, metrics::Transcript::make(e.utt_id, e.transcript),
                     signal::extract_mel(w, cfg, fb)});
    } catch (const Error& err) {
      excluded.push_back({"load", "-", e.utt_id, 0, err.what()});
    }
  }
  return out;
}

DatasetStats compute_stats(std::span<const PreparedUtterance> utterances) {
  if (utterances.empty()) throw UsageError("stats: no utterances");
  DatasetStats s;
  double total = 0.0;
  for (const auto& u : utterances) {
    if (s.nu != 0 && s.nu != u.mel.nu()) throw DimensionMismatch("stats: mixed mel bin counts");
    s.nu = static_cast<int>(u.mel.nu());
    total += static_cast<double>(u.mel.tau());
  }
  s.utterance_count = utterances.size();
  s.mean_tau = total / static_cast<double>(utterances.size());
  return s;
}

Estimate estimate_e_o(const SearchContext& ctx) {
  require_ready(ctx);
  std::vector<Trial> trials(ctx.utterances.size());
  for (std::size_t i = 0; i < trials.size(); ++i) trials[i].utterance = i;
  parallel_for(trials.size(), ctx.workers, [&](std::size_t i) {
    auto& t = trials[i];
    const auto& utt = ctx.utterances[t.utterance];
    try {
      t.cer = score(ctx, utt, utt.mel, asr::baseline_key(utt.utt_id));
    } catch (const std::exception& e) {
      t.failure = e.what();
    }
  });
  return collect(trials, ctx, std::string(kBaselinePolicy), 0, "-");
}

Estimate estimate_e_p(const SearchContext& ctx, const augment::PolicyParams& p,
                      int param_index) {
  require_ready(ctx);
  augment::validate(p);
  const std::string policy(augment::tag(augment::kind_of(p)));
  const std::string repr = augment::format_params(p);
  std::vector<Trial> trials;
  for (std::size_t u = 0; u < ctx.utterances.size(); ++u)
    for (int r = 0; r < ctx.repeats; ++r) trials.push_back({u, r, std::nullopt, {}});
  parallel_for(trials.size(), ctx.workers, [&](std::size_t i) {
    auto& t = trials[i];
    const auto& utt = ctx.utterances[t.utterance];
    try {
      const auto seed = augment::substream(ctx.seed, utt.utt_id, policy,
                                           static_cast<std::uint64_t>(param_index),
                                           static_cast<std::uint64_t>(t.repeat));
      const MelSpectrogram augmented = augment::apply(utt.mel, p, seed);
      t.cer = score(ctx, utt, augmented,
                    asr::request_key(utt.utt_id, policy, static_cast<std::size_t>(param_index),
                                     static_cast<std::size_t>(t.repeat)));
    } catch (const std::exception& e) {
      t.failure = e.what();
    }
  });
  return collect(trials, ctx, policy, param_index, repr);
}

PolicySearchResult search_policy(augment::PolicyKind kind, const SearchSchedule& schedule,
                                 const SearchContext& ctx, double e_o) {
  PolicySearchResult out;
  const auto params = schedule_params(kind, schedule);
  for (std::size_t i = 0; i < params.size(); ++i)
    append(out.measurements, out.exclusions, estimate_e_p(ctx, params[i], static_cast<int>(i)));
  out.records = records_for(kind, out.measurements, ctx, e_o);
  out.best = out.records[best_index(out.records)];
  return out;
}

TwoStageResult search_masking_two_stage(augment::PolicyKind kind, const SearchSchedule& stage1,
                                        const SearchContext& ctx, double e_o) {
  using augment::PolicyKind;
  if (kind != PolicyKind::TimeMask && kind != PolicyKind::FreqMask)
    throw UsageError("two-stage search applies to masking policies only");
  TwoStageResult out;
  const auto first = search_policy(kind, stage1, ctx, e_o);
  out.measurements = first.measurements;
  out.exclusions = first.exclusions;

  const int best_width = kind == PolicyKind::TimeMask
                             ? std::get<augment::TimeMask>(first.best.param).max_width
                             : std::get<augment::FreqMask>(first.best.param).max_width;
  if (best_width >= 1) {
    const auto pairs = divisor_pairs(best_width);
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      const auto [width, count] = pairs[c];
      if (count == 1) continue;  // measured in stage 1
      augment::PolicyParams p = kind == PolicyKind::TimeMask
                                    ? augment::PolicyParams{augment::TimeMask{width, count}}
                                    : augment::PolicyParams{augment::FreqMask{width, count}};
      append(out.measurements, out.exclusions,
             estimate_e_p(ctx, p, stage1.count + static_cast<int>(c)));
    }
  }

  for (auto& r : records_for(kind, out.measurements, ctx, e_o))
    (r.stage == Stage::Single ? out.stage1 : out.stage2).push_back(r);
  const auto& final_stage = out.stage2.empty() ? out.stage1 : out.stage2;
  out.best = final_stage[best_index(final_stage)];
  return out;
}

SearchRun run_search(const SearchContext& ctx, std::span<const augment::PolicyKind> policies,
                     const std::map<augment::PolicyKind, SearchSchedule>& schedules) {
  SearchRun run;
  auto baseline = estimate_e_o(ctx);
  const double e_o = baseline.mean;
  append(run.measurements, run.exclusions, std::move(baseline));
  for (auto kind : policies) {
    const auto it = schedules.find(kind);
    const SearchSchedule schedule = it != schedules.end() ? it->second : default_schedule(kind);
    if (kind == augment::PolicyKind::TimeMask || kind == augment::PolicyKind::FreqMask) {
      auto r = search_masking_two_stage(kind, schedule, ctx, e_o);
      run.measurements.insert(run.measurements.end(), r.measurements.begin(), r.measurements.end());
      run.exclusions.insert(run.exclusions.end(), r.exclusions.begin(), r.exclusions.end());
    } else {
      auto r = search_policy(kind, schedule, ctx, e_o);
      run.measurements.insert(run.measurements.end(), r.measurements.begin(), r.measurements.end());
      run.exclusions.insert(run.exclusions.end(), r.exclusions.begin(), r.exclusions.end());
    }
  }
  ReportOptions opts = ctx.report;
  opts.policies.assign(policies.begin(), policies.end());
  run.report = build_report(run.measurements, ctx.stats, opts);
  return run;
}

std::string format_exclusions(std::span<const Exclusion> exclusions) {
  std::string out = "policy\tparam_repr\tutt_id\trepeat\treason\n";
  for (const auto& e : exclusions) {
    std::string reason = e.reason;
    std::replace(reason.begin(), reason.end(), '\t', ' ');
    std::replace(reason.begin(), reason.end(), '\n', ' ');
    out += fmt::format("{}\t{}\t{}\t{}\t{}\n", e.policy, e.param_repr, e.utt_id, e.repeat, reason);
  }
  return out;
}

}  // namespace melaug::search
