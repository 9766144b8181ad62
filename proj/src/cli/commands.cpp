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

#include "melaug/cli/commands.hpp"

#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "melaug/augment/policies.hpp"
#include "melaug/cli/config.hpp"
#include "melaug/cli/manifest.hpp"
#include "melaug/error.hpp"
#include "melaug/io.hpp"
#include "melaug/metrics/mcd.hpp"
#include "melaug/metrics/text.hpp"
#include "melaug/search/live.hpp"
#include "melaug/search/report.hpp"
#include "melaug/signal/griffin_lim.hpp"
#include "melaug/signal/mel.hpp"
#include "melaug/signal/mels_io.hpp"
#include "melaug/signal/wav.hpp"

namespace melaug::cli {
namespace {

namespace fs = std::filesystem;

struct Options {
  std::string config;
  std::string in;
  std::string out;

  // augment
  std::string policy;
  std::string param;
  std::optional<std::uint64_t> seed;
  std::string pair_in;
  std::string pair_out;

  // invert
  std::optional<int> iters;

  // stats, dpd-search
  std::string manifest;
  std::string search_policy = "all";
  std::string out_report;
  std::string measurements_in;
  std::string measurements_out;
  std::optional<int> workers;

  // metrics
  std::string hyp;
  std::string ref;
  std::string hyp_text;
  std::string ref_text;
  std::string mcd_a;
  std::string mcd_b;
  std::optional<int> order;
};

ToolConfig config_from(const Options& o) {
  return o.config.empty() ? ToolConfig{} : load_config(o.config);
}

int cmd_extract(const Options& o, std::ostream& out) {
  const ToolConfig cfg = config_from(o);
  const Waveform w = signal::load_wav(o.in);
  const MelSpectrogram m = signal::extract_mel(w, cfg.mel);
  signal::write_mels(m, o.out);
  out << fmt::format("tau={} nu={}\n", m.tau(), m.nu());
  return kExitOk;
}

int cmd_augment(const Options& o, std::ostream& out) {
  const auto kind = augment::parse_tag(o.policy);
  if (!kind) throw UsageError("unknown policy '" + o.policy + "' (tw fm tm fw lc tlc)");
  const auto params = augment::parse_params(*kind, o.param);
  augment::validate(params);
  const augment::AugSeed seed{*o.seed};
  const MelSpectrogram in = signal::read_mels(o.in);

  const bool pair = !o.pair_in.empty() || !o.pair_out.empty();
  if (pair) {
    if (*kind != augment::PolicyKind::TimeLenCtl)
      throw UsageError("--pair-in/--pair-out apply to policy tlc only");
    if (o.pair_in.empty() || o.pair_out.empty())
      throw UsageError("--pair-in and --pair-out must be given together");
    const MelSpectrogram target = signal::read_mels(o.pair_in);
    const auto r = augment::time_len_ctl_pair(
        in, target, std::get<augment::TimeLenCtl>(params).max_fraction, seed);
    signal::write_mels(r.source, o.out);
    signal::write_mels(r.target, o.pair_out);
    out << fmt::format("ratio={} tau_src={} tau_tgt={}\n", r.ratio, r.source.tau(),
                       r.target.tau());
    return kExitOk;
  }
  const MelSpectrogram result = augment::apply(in, params, seed);
  signal::write_mels(result, o.out);
  out << fmt::format("policy={} param={} tau={} nu={}\n", o.policy,
                     augment::format_params(params), result.tau(), result.nu());
  return kExitOk;
}

int cmd_invert(const Options& o, std::ostream& out) {
  const ToolConfig cfg = config_from(o);
  const int iters = o.iters.value_or(cfg.griffin_lim_iterations);
  if (iters < 1) throw UsageError("--iters must be >= 1");
  const MelSpectrogram m = signal::read_mels(o.in);
  const auto trace = signal::griffin_lim_trace(m, iters);
  signal::write_wav(trace.waveform, o.out);
  out << fmt::format("samples={} consistency_error={:.6g}\n", trace.waveform.size(),
                     trace.consistency_errors.back());
  return kExitOk;
}

void report_exclusions(std::span<const search::Exclusion> excluded, std::ostream& err) {
  for (const auto& e : excluded) err << "excluded " << e.utt_id << ": " << e.reason << "\n";
}

int cmd_stats(const Options& o, std::ostream& out, std::ostream& err) {
  const ToolConfig cfg = config_from(o);
  const auto manifest = read_manifest(o.manifest);
  if (manifest.empty()) {
    err << "error: manifest " << o.manifest << " has no entries\n";
    return kExitFailure;
  }
  std::vector<search::Exclusion> excluded;
  const auto utts = search::prepare_utterances(manifest, cfg.mel, excluded);
  report_exclusions(excluded, err);
  if (utts.empty()) {
    err << "error: no readable utterances in " << o.manifest << "\n";
    return kExitFailure;
  }
  const auto stats = search::compute_stats(utts);
  out << fmt::format("utterances\t{}\nE(tau)\t{:.1f}\nnu\t{}\n", stats.utterance_count,
                     stats.mean_tau, stats.nu);
  return kExitOk;
}

std::vector<augment::PolicyKind> policies_from(const std::string& text) {
  if (text == "all") return {augment::kAllPolicies.begin(), augment::kAllPolicies.end()};
  const auto kind = augment::parse_tag(text);
  if (!kind) throw UsageError("unknown policy '" + text + "' (all tw fm tm fw lc tlc)");
  return {*kind};
}

void print_selected(const search::Report& report, std::ostream& out) {
  out << fmt::format("E_o\t{:.6f}\n", report.e_o);
  for (const auto& r : report.records)
    if (r.selected)
      out << fmt::format("selected\t{}\t{}\t{}\n", search::report_policy_label(r),
                         augment::format_params(r.param),
                         r.dpd.infinite ? std::string("inf") : fmt::format("{:.3f}", r.dpd.value));
}

int cmd_dpd_search(const Options& o, std::ostream& out, std::ostream& err) {
  const ToolConfig cfg = config_from(o);
  search::ReportOptions report_opts;
  report_opts.dp_decimals = cfg.dp_decimals;
  report_opts.policies = policies_from(o.search_policy);

  if (!o.measurements_in.empty()) {
    const auto rows = search::read_measurements(o.measurements_in);
    search::DatasetStats stats;
    if (cfg.stats_mean_tau || cfg.stats_nu) {
      if (!cfg.stats_mean_tau || !cfg.stats_nu)
        throw ConfigError("stats.mean_tau and stats.nu must be set together");
      stats.mean_tau = *cfg.stats_mean_tau;
      stats.nu = *cfg.stats_nu;
    } else if (!o.manifest.empty()) {
      std::vector<search::Exclusion> excluded;
      const auto utts = search::prepare_utterances(read_manifest(o.manifest), cfg.mel, excluded);
      report_exclusions(excluded, err);
      stats = search::compute_stats(utts);
    } else {
      throw UsageError("offline mode needs stats.mean_tau/stats.nu in --config or a --manifest");
    }
    const auto report = search::build_report(rows, stats, report_opts);
    for (const auto& note : report.notes) err << "note: " << note << "\n";
    search::write_report(o.out_report, report);
    print_selected(report, out);
    return kExitOk;
  }

  if (o.manifest.empty()) throw UsageError("live mode needs --manifest (or --measurements-in)");
  if (!cfg.transcriber_configured)
    throw UsageError("live mode needs transcriber.* settings in --config");
  const auto seed = o.seed ? o.seed : cfg.seed;
  if (!seed) throw UsageError("live mode needs --seed or search.seed");

  const auto transcriber = asr::make_transcriber(cfg.transcriber);
  std::vector<search::Exclusion> excluded;
  search::SearchContext ctx;
  ctx.utterances = search::prepare_utterances(read_manifest(o.manifest), cfg.mel, excluded);
  if (ctx.utterances.empty()) {
    report_exclusions(excluded, err);
    err << "error: no readable utterances in " << o.manifest << "\n";
    return kExitFailure;
  }
  ctx.stats = search::compute_stats(ctx.utterances);
  ctx.griffin_lim_iterations = cfg.griffin_lim_iterations;
  ctx.repeats = cfg.repeats;
  ctx.seed = {*seed};
  ctx.transcriber = transcriber.get();
  ctx.workers = o.workers.value_or(cfg.workers);
  ctx.report = report_opts;

  auto run = search::run_search(ctx, report_opts.policies, cfg.schedules);
  excluded.insert(excluded.end(), run.exclusions.begin(), run.exclusions.end());

  search::write_report(o.out_report, run.report);
  const fs::path measurements_out =
      o.measurements_out.empty() ? fs::path(o.out_report + ".measurements.tsv")
                                 : fs::path(o.measurements_out);
  search::write_measurements(measurements_out, run.measurements);
  if (!excluded.empty()) {
    const auto sidecar = o.out_report + ".exclusions.tsv";
    write_file_atomic(sidecar, search::format_exclusions(excluded));
    err << fmt::format("{} trial(s) excluded, see {}\n", excluded.size(), sidecar);
  }
  for (const auto& note : run.report.notes) err << "note: " << note << "\n";
  print_selected(run.report, out);
  return kExitOk;
}

std::string text_arg(const std::string& file, const std::string& literal, const char* name) {
  if (!file.empty() && !literal.empty())
    throw UsageError(fmt::format("give either --{0} or --{0}-text", name));
  if (!file.empty()) return read_file_text(file);
  return literal;
}

int cmd_text_metric(const Options& o, bool words, std::ostream& out) {
  const auto hyp = metrics::Transcript::make("hyp", text_arg(o.hyp, o.hyp_text, "hyp"));
  const auto ref = metrics::Transcript::make("ref", text_arg(o.ref, o.ref_text, "ref"));
  const double v = words ? metrics::wer(hyp, ref) : metrics::cer(hyp, ref);
  out << fmt::format("{:.3f}\n", v);
  return kExitOk;
}

int cmd_mcd(const Options& o, std::ostream& out) {
  const ToolConfig cfg = config_from(o);
  const int order = o.order.value_or(cfg.mcd_order);
  const auto a = metrics::mel_to_mcep(signal::read_mels(o.mcd_a), order);
  const auto b = metrics::mel_to_mcep(signal::read_mels(o.mcd_b), order);
  out << fmt::format("{:.3f}\n", metrics::mcd(a, b));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mel-spectrogram augmentation and DPD hyperparameter search"};
  app.name("melaug");
  app.require_subcommand(1);
  Options o;

  auto* extract = app.add_subcommand("extract", "WAV to log-mel MELS file");
  extract->add_option("--in", o.in, "input WAV")->required();
  extract->add_option("--out", o.out, "output MELS")->required();
  extract->add_option("--config", o.config, "config file");

  auto* aug = app.add_subcommand("augment", "apply one augmentation policy to a MELS file");
  aug->add_option("--policy", o.policy, "tw | fm | tm | fw | lc | tlc")->required();
  aug->add_option("--param", o.param, "e.g. 0.08, F=3,Nf=2, T=4,Nt=2")->required();
  aug->add_option("--seed", o.seed, "random seed")->required();
  aug->add_option("--in", o.in, "input MELS")->required();
  aug->add_option("--out", o.out, "output MELS")->required();
  aug->add_option("--pair-in", o.pair_in, "paired target MELS (tlc)");
  aug->add_option("--pair-out", o.pair_out, "paired target output (tlc)");

  auto* invert = app.add_subcommand("invert", "MELS to WAV with Griffin-Lim");
  invert->add_option("--in", o.in, "input MELS")->required();
  invert->add_option("--out", o.out, "output WAV")->required();
  invert->add_option("--iters", o.iters, "Griffin-Lim iterations (default 60)");
  invert->add_option("--config", o.config, "config file");

  auto* stats = app.add_subcommand("stats", "utterance count, E(tau) and nu of a manifest");
  stats->add_option("--manifest", o.manifest, "manifest TSV")->required();
  stats->add_option("--config", o.config, "config file");

  auto* dpd = app.add_subcommand("dpd-search", "DPD hyperparameter search");
  dpd->add_option("--manifest", o.manifest, "manifest TSV");
  dpd->add_option("--config", o.config, "config file");
  dpd->add_option("--policy", o.search_policy, "all | tw | fm | tm | fw | lc | tlc");
  dpd->add_option("--out-report", o.out_report, "report TSV")->required();
  dpd->add_option("--measurements-in", o.measurements_in, "rebuild the report offline");
  dpd->add_option("--measurements-out", o.measurements_out, "raw per-trial CER TSV");
  dpd->add_option("--seed", o.seed, "random seed (overrides search.seed)");
  dpd->add_option("--workers", o.workers, "worker threads");

  auto* metrics_cmd = app.add_subcommand("metrics", "objective metrics");
  metrics_cmd->require_subcommand(1);
  auto* cer = metrics_cmd->add_subcommand("cer", "character error rate");
  auto* wer = metrics_cmd->add_subcommand("wer", "word error rate");
  for (auto* sub : {cer, wer}) {
    sub->add_option("--hyp", o.hyp, "hypothesis text file");
    sub->add_option("--ref", o.ref, "reference text file");
    sub->add_option("--hyp-text", o.hyp_text, "hypothesis text");
    sub->add_option("--ref-text", o.ref_text, "reference text");
  }
  auto* mcd = metrics_cmd->add_subcommand("mcd", "mel-cepstral distortion between MELS files");
  mcd->add_option("--a", o.mcd_a, "first MELS")->required();
  mcd->add_option("--b", o.mcd_b, "second MELS")->required();
  mcd->add_option("--order", o.order, "cepstral order K (default 13)");
  mcd->add_option("--config", o.config, "config file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const bool is_metrics = metrics_cmd->parsed();
  try {
    if (extract->parsed()) return cmd_extract(o, out);
    if (aug->parsed()) return cmd_augment(o, out);
    if (invert->parsed()) return cmd_invert(o, out);
    if (stats->parsed()) return cmd_stats(o, out, err);
    if (dpd->parsed()) return cmd_dpd_search(o, out, err);
    if (cer->parsed()) return cmd_text_metric(o, false, out);
    if (wer->parsed()) return cmd_text_metric(o, true, out);
    if (mcd->parsed()) return cmd_mcd(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_metrics ? kExitUsage : kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return is_metrics ? kExitUsage : kExitFailure;
  }
  return kExitUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace melaug::cli
