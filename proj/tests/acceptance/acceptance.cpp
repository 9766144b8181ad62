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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "../unit/oracles.hpp"
#include "../unit/test_transcriber.hpp"
#include "../unit/test_util.hpp"
#include "melaug/augment/policies.hpp"
#include "melaug/cli/config.hpp"
#include "melaug/metrics/mcd.hpp"
#include "melaug/metrics/text.hpp"
#include "melaug/search/dpd.hpp"
#include "melaug/search/live.hpp"
#include "melaug/search/measurements.hpp"
#include "melaug/search/report.hpp"
#include "melaug/signal/griffin_lim.hpp"
#include "melaug/signal/mel.hpp"
#include "melaug/signal/mels_io.hpp"

using namespace melaug;
using augment::PolicyKind;
using search::Stage;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

const std::string kFixtures = MELAUG_FIXTURE_DIR;

struct Expected {
  PolicyKind kind;
  std::vector<std::string> params;
  std::vector<double> dpd;
  std::string selected;
};

// Stage-1 DPD grid as printed (three decimals).
const std::vector<Expected> kStageOne = {
    {PolicyKind::TimeMask,
     {"T=2,Nt=1", "T=4,Nt=1", "T=6,Nt=1", "T=8,Nt=1", "T=10,Nt=1", "T=12,Nt=1", "T=14,Nt=1", "T=16,Nt=1"},
     {0.643, 1.125, 1.167, 1.762, 1.484, 1.667, 1.667, 1.574},
     "T=8,Nt=1"},
    {PolicyKind::FreqMask,
     {"F=2,Nf=1", "F=4,Nf=1", "F=6,Nf=1", "F=8,Nf=1", "F=10,Nf=1", "F=12,Nf=1", "F=14,Nf=1", "F=16,Nf=1"},
     {1.563, 1.923, 2.206, 1.429, 1.923, 1.485, 1.259, 1.370},
     "F=6,Nf=1"},
    {PolicyKind::TimeWarp,
     {"W=0.02", "W=0.04", "W=0.06", "W=0.08", "W=0.1", "W=0.12", "W=0.14", "W=0.16"},
     {1.176, 2.500, 3.158, 3.636, 2.439, 2.182, 2.188, 2.025},
     "W=0.08"},
    {PolicyKind::FreqWarp,
     {"H=2", "H=4", "H=6", "H=8", "H=10", "H=12", "H=14", "H=16"},
     {1.042, 1.389, 0.882, 0.714, 0.628, 0.636, 0.557, 0.581},
     "H=4"},
    {PolicyKind::TimeLenCtl,
     {"L=0.02", "L=0.04", "L=0.06", "L=0.08", "L=0.1", "L=0.12", "L=0.14", "L=0.16"},
     {2.000, 4.444, 3.158, 8.000, 6.667, 30.00, 7.778, 13.333},
     "L=0.12"},
    {PolicyKind::LoudnessCtl,
     {"Lambda=0.02", "Lambda=0.04", "Lambda=0.08", "Lambda=0.16", "Lambda=0.32", "Lambda=0.64"},
     {1.667, 2.500, 4.706, 8.000, 6.038, 3.122},
     "Lambda=0.16"},
};

const std::vector<Expected> kStageTwo = {
    {PolicyKind::TimeMask, {"T=1,Nt=8", "T=2,Nt=4", "T=4,Nt=2", "T=8,Nt=1"}, {2.467, 2.176, 3.364, 1.762}, "T=4,Nt=2"},
    {PolicyKind::FreqMask, {"F=1,Nf=6", "F=2,Nf=3", "F=3,Nf=2", "F=6,Nf=1"}, {4.412, 6.250, 6.818, 2.206}, "F=3,Nf=2"},
};

search::Report offline_report(double* elapsed = nullptr, std::string* text = nullptr) {
  const auto t0 = Clock::now();
  const auto cfg = cli::load_config(kFixtures + "/table.conf");
  const auto rows = search::read_measurements(kFixtures + "/table_measurements.tsv");
  search::DatasetStats stats{*cfg.stats_mean_tau, *cfg.stats_nu, 64};
  search::ReportOptions options;
  options.dp_decimals = cfg.dp_decimals;
  auto report = search::build_report(rows, stats, options);
  if (text) *text = search::format_report(report);
  if (elapsed) *elapsed = seconds_since(t0);
  return report;
}

void compare_stage(const search::Report& report, const std::vector<Expected>& expected, Stage stage,
                   double tolerance, Outcome& o, double* worst) {
  for (const auto& e : expected) {
    std::vector<const search::DpdRecord*> recs;
    for (const auto& r : report.records)
      if (r.policy == e.kind && r.stage == stage) recs.push_back(&r);
    std::vector<std::string> got_params;
    for (auto* r : recs) got_params.push_back(augment::format_params(r->param));
    if (got_params != e.params) {
      o.fail(fmt::format("{} candidates differ", augment::tag(e.kind)));
      continue;
    }
    for (std::size_t i = 0; i < recs.size(); ++i) {
      const double diff = std::abs(recs[i]->dpd.value - e.dpd[i]);
      *worst = std::max(*worst, diff);
      if (!(diff <= tolerance))
        o.fail(fmt::format("{} {} dpd {:.4f} vs {:.3f}", augment::tag(e.kind), e.params[i],
                           recs[i]->dpd.value, e.dpd[i]));
      if (recs[i]->selected != (e.params[i] == e.selected))
        o.fail(fmt::format("{} selection mismatch at {}", augment::tag(e.kind), e.params[i]));
    }
  }
}

Outcome criterion1() {
  Outcome o;
  double elapsed = 0.0, worst = 0.0;
  const auto report = offline_report(&elapsed);
  if (std::abs(report.e_o - 0.201) > 1e-9) o.fail(fmt::format("E_o {}", report.e_o));
  compare_stage(report, kStageOne, Stage::Single, 0.01, o, &worst);
  if (elapsed >= 1.0) o.fail(fmt::format("runtime {:.3f}s", elapsed));
  o.detail = fmt::format("46 cells, max |diff| {:.4f}, selections T=8 F=6 W=0.08 H=4 L=0.12 Lambda=0.16, {:.3f}s{}",
                         worst, elapsed, o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome criterion2() {
  Outcome o;
  double elapsed = 0.0, worst = 0.0;
  const auto report = offline_report(&elapsed);
  compare_stage(report, kStageTwo, Stage::Pairs, 0.01, o, &worst);
  if (elapsed >= 1.0) o.fail(fmt::format("runtime {:.3f}s", elapsed));
  o.detail = fmt::format("candidates exact, selected (4,2) and (3,2), max |diff| {:.4f}, {:.3f}s{}", worst,
                         elapsed, o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome criterion3() {
  Outcome o;
  const double a = search::dpd(0.037, 0.222, 0.201).value;
  const double b = search::dpd(0.12, 0.205, 0.201).value;
  const double c = search::deformation_ratio(augment::FreqWarp{4}, {217.0, 80, 64});
  if (!(std::abs(a - 1.762) <= 0.001)) o.fail(fmt::format("dpd a = {}", a));
  if (!(std::abs(b - 30.00) <= 0.01)) o.fail(fmt::format("dpd b = {}", b));
  if (c != 0.050) o.fail(fmt::format("D_H = {:.17g}", c));
  o.detail = fmt::format("{:.4f}, {:.4f}, {:.3f}{}", a, b, c, o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::mt19937_64 gen(2024);
  std::uniform_int_distribution<Index> tau(8, 300);
  const auto t0 = Clock::now();
  int checks = 0;
  for (int i = 0; i < 100; ++i) {
    const auto m = test::random_mel(gen, 80, tau(gen));
    for (auto kind : augment::kAllPolicies) {
      ++checks;
      if (!(augment::apply(m, augment::zero_params(kind), augment::AugSeed{gen()}) == m))
        o.fail(fmt::format("{} not identity on sample {}", augment::tag(kind), i));
    }
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 1.0) o.fail(fmt::format("runtime {:.3f}s", elapsed));
  o.detail = fmt::format("{} exact comparisons, {:.3f}s{}", checks, elapsed, o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937_64 gen(5);
  const auto m = test::random_mel(gen, 80, 217);
  const std::vector<augment::PolicyParams> selected = {
      augment::TimeMask{4, 2}, augment::FreqMask{3, 2}, augment::TimeWarp{0.08},
      augment::FreqWarp{4},    augment::TimeLenCtl{0.12}, augment::LoudnessCtl{0.16}};
  int differing = 0;
  for (const auto& p : selected) {
    const auto a = augment::apply(m, p, augment::AugSeed{7});
    const auto b = augment::apply(m, p, augment::AugSeed{7});
    if (!(a == b)) o.fail(augment::format_params(p) + " not reproducible");
    if (!(a == augment::apply(m, p, augment::AugSeed{8}))) ++differing;
  }
  if (differing == 0) o.fail("seeds 7 and 8 agree for every policy");

  test::EnvelopeTranscriber transcriber;
  search::SearchContext ctx;
  ctx.utterances = test::synthetic_utterances(3, 0.4);
  ctx.stats = search::compute_stats(ctx.utterances);
  ctx.griffin_lim_iterations = 4;
  ctx.repeats = 2;
  ctx.seed = augment::AugSeed{7};
  ctx.transcriber = &transcriber;
  const std::vector<PolicyKind> policies = {PolicyKind::TimeWarp, PolicyKind::FreqWarp,
                                            PolicyKind::LoudnessCtl};
  const std::map<PolicyKind, search::SearchSchedule> schedules = {
      {PolicyKind::TimeWarp, {search::ScheduleKind::Arithmetic, 0.05, 0.05, 4}},
      {PolicyKind::FreqWarp, {search::ScheduleKind::Arithmetic, 2, 2, 4}},
      {PolicyKind::LoudnessCtl, {search::ScheduleKind::Geometric, 0.1, 2.0, 4}}};
  ctx.workers = 1;
  const auto serial = search::run_search(ctx, policies, schedules);
  ctx.workers = 4;
  const auto parallel = search::run_search(ctx, policies, schedules);
  const auto serial_text = search::format_report(serial.report);
  if (serial_text != search::format_report(parallel.report)) o.fail("serial and 4-way reports differ");
  if (search::format_measurements(serial.measurements) != search::format_measurements(parallel.measurements))
    o.fail("serial and 4-way measurements differ");
  int finite = 0;
  for (const auto& r : serial.report.records) finite += r.dpd.infinite ? 0 : 1;
  o.detail = fmt::format("6 policies reproducible, {} of 6 differ across seeds, 12-row report identical ({} finite DPD){}",
                         differing, finite, o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

std::u32string random_string(std::mt19937_64& gen) {
  std::uniform_int_distribution<std::size_t> len(0, 12);
  std::uniform_int_distribution<int> ch(0, 3);
  std::u32string s(len(gen), U'a');
  for (auto& c : s) c = static_cast<char32_t>(U'a' + ch(gen));
  return s;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 gen(6);
  int mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const auto a = random_string(gen);
    const auto b = random_string(gen);
    if (metrics::edit_distance(a, b) != test::edit_distance_oracle(a, b)) ++mismatches;
  }
  if (mismatches) o.fail(fmt::format("{} edit-distance mismatches", mismatches));
  std::uniform_int_distribution<Index> len(1, 8);
  std::normal_distribution<double> val;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    metrics::McepSequence x{Eigen::MatrixXd(3, len(gen))};
    metrics::McepSequence y{Eigen::MatrixXd(3, len(gen))};
    for (Index k = 0; k < x.frames.size(); ++k) x.frames.data()[k] = val(gen);
    for (Index k = 0; k < y.frames.size(); ++k) y.frames.data()[k] = val(gen);
    worst = std::max(worst, std::abs(metrics::dtw_align(x, y).cost - test::dtw_bruteforce(x.frames, y.frames)));
  }
  if (!(worst <= 1e-9)) o.fail(fmt::format("dtw max |diff| {:.3g}", worst));
  o.detail = fmt::format("200 string pairs, {} mismatches; 50 DTW pairs, max |diff| {:.3g}{}", mismatches, worst,
                         o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome criterion7() {
  Outcome o;
  const MelConfig cfg;
  const auto m = signal::extract_mel(test::tone(440.0, 0.5), cfg);
  const auto t0 = Clock::now();
  const auto trace = signal::griffin_lim_trace(m, 60);
  const double elapsed = seconds_since(t0);
  int increases = 0;
  for (std::size_t k = 1; k < trace.consistency_errors.size(); ++k)
    if (trace.consistency_errors[k] > trace.consistency_errors[k - 1]) ++increases;
  if (trace.consistency_errors.size() != 61) o.fail("expected 61 recorded errors");
  if (increases) o.fail(fmt::format("{} increases", increases));
  if (elapsed >= 10.0) o.fail(fmt::format("runtime {:.2f}s", elapsed));
  const auto again = signal::extract_mel(trace.waveform, cfg);
  double cosine = 0.0;
  if (again.tau() != m.tau()) {
    o.fail("frame count changed");
  } else {
    const Eigen::VectorXd a = m.values.cast<double>().reshaped();
    const Eigen::VectorXd b = again.values.cast<double>().reshaped();
    cosine = a.dot(b) / (a.norm() * b.norm());
    if (!(cosine > 0.9)) o.fail(fmt::format("cosine {:.4f}", cosine));
  }
  const auto bytes = signal::encode_mels(m);
  const auto back = signal::decode_mels(bytes);
  if (!(back == m) || signal::encode_mels(back) != bytes) o.fail("MELS round trip not bit-exact");
  o.detail = fmt::format("60 iterations monotone ({:.4g} -> {:.4g}), {:.2f}s, cosine {:.4f}, MELS bit-exact{}",
                         trace.consistency_errors.front(), trace.consistency_errors.back(), elapsed, cosine,
                         o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::mt19937_64 gen(8);
  std::uniform_int_distribution<Index> tau(2, 800);
  std::uniform_real_distribution<double> frac(0.0, 0.99);
  int bad_len = 0;
  for (int i = 0; i < 100; ++i) {
    const auto m = test::constant_mel(4, tau(gen), 0.0f);
    const auto r = augment::time_len_ctl(m, frac(gen), augment::AugSeed{gen()});
    if (r.mel.tau() != std::max<Index>(2, std::llround(static_cast<double>(m.tau()) + r.drawn_l))) ++bad_len;
  }
  if (bad_len) o.fail(fmt::format("{} length mismatches", bad_len));
  std::uniform_int_distribution<Index> pair_tau(20, 800);
  std::uniform_real_distribution<double> ratio(-0.5, 0.5);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto src = test::constant_mel(2, pair_tau(gen), 0.0f);
    const auto tgt = test::constant_mel(2, pair_tau(gen), 0.0f);
    const double r = ratio(gen);
    const auto out = augment::time_len_ctl_pair_at(src, tgt, r);
    worst = std::max({worst, std::abs(out.source.tau() - src.tau() * (1.0 + r)),
                      std::abs(out.target.tau() - tgt.tau() * (1.0 + r))});
  }
  if (!(worst <= 1.0)) o.fail(fmt::format("pair deviation {:.3f} frames", worst));
  o.detail = fmt::format("100 draws exact; 100 pairs, max deviation from proportional length {:.3f} frames{}", worst,
                         o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::mt19937_64 gen(10);
  const auto m = test::random_mel(gen, 80, 1000);
  const std::vector<augment::PolicyParams> params = {
      augment::TimeMask{8, 1}, augment::FreqMask{6, 1}, augment::TimeWarp{0.08},
      augment::FreqWarp{4},    augment::TimeLenCtl{0.12}, augment::LoudnessCtl{0.16}};
  double slowest = 0.0;
  for (const auto& p : params) {
    const auto t0 = Clock::now();
    const auto out = augment::apply(m, p, augment::AugSeed{1});
    const double elapsed = seconds_since(t0);
    slowest = std::max(slowest, elapsed);
    if (elapsed >= 0.05 || out.nu() != 80) o.fail(fmt::format("{} took {:.1f} ms", augment::format_params(p), 1e3 * elapsed));
  }
  const auto t0 = Clock::now();
  const auto report = offline_report();
  search::write_report(test::scratch_dir("acceptance") / "report.tsv", report);
  const double pipeline = seconds_since(t0);
  if (pipeline >= 5.0) o.fail(fmt::format("offline pipeline {:.2f}s", pipeline));
  o.detail = fmt::format("slowest policy {:.2f} ms on 80x1000, offline pipeline with report emission {:.3f}s{}",
                         1e3 * slowest, pipeline, o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
      {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8}};
  bool all = true;
  bool substituted_ok = true;
  auto report = [&](int id, const Outcome& o) {
    std::printf("criterion %2d: %s  %s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  };
  for (const auto& [id, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    substituted_ok = substituted_ok && o.pass;
    report(id, o);
  }
  Outcome nine;
  nine.pass = substituted_ok;
  nine.detail =
      "live E_o/E_p from real speech and a commercial recognizer, and model training with listening tests, "
      "are out of reach here; stated substitution is criteria 1-3 (fixture reproduction) and 4-8 (properties), "
      + std::string(substituted_ok ? "all passing" : "not all passing");
  report(9, nine);
  Outcome ten;
  try {
    ten = criterion10();
  } catch (const std::exception& e) {
    ten.fail(std::string("exception: ") + e.what());
  }
  report(10, ten);
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
  return all ? 0 : 1;
}
