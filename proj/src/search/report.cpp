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

#include "melaug/search/report.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include <fmt/format.h>

#include "melaug/error.hpp"
#include "melaug/io.hpp"

namespace melaug::search {
namespace {

using augment::FreqMask;
using augment::TimeMask;

struct Group {
  PolicyParams param;
  std::vector<Measurement> trials;
};

bool is_mask(PolicyKind k) { return k == PolicyKind::TimeMask || k == PolicyKind::FreqMask; }

std::pair<int, int> mask_shape(const PolicyParams& p) {
  if (const auto* t = std::get_if<TimeMask>(&p)) return {t->max_width, t->count};
  const auto& f = std::get<FreqMask>(p);
  return {f.max_width, f.count};
}

/// Numeric sort key so rows print in ascending parameter order.
std::tuple<double, int> sort_key(const PolicyParams& p) {
  using namespace augment;
  switch (kind_of(p)) {
    case PolicyKind::TimeWarp: return {std::get<TimeWarp>(p).max_fraction, 0};
    case PolicyKind::FreqWarp: return {std::get<FreqWarp>(p).max_bins, 0};
    case PolicyKind::LoudnessCtl: return {std::get<LoudnessCtl>(p).max_lambda, 0};
    case PolicyKind::TimeLenCtl: return {std::get<TimeLenCtl>(p).max_fraction, 0};
    default: {
      auto [w, n] = mask_shape(p);
      return {w, n};
    }
  }
}

DpdRecord make_record(PolicyKind kind, Stage stage, const Group& g, const DatasetStats& stats,
                      double e_o, const ReportOptions& options) {
  DpdRecord r;
  r.policy = kind;
  r.stage = stage;
  r.param = g.param;
  r.d_p = deformation_ratio(g.param, stats);
  if (options.dp_decimals) {
    const double scale = std::pow(10.0, *options.dp_decimals);
    r.d_p = std::round(r.d_p * scale) / scale;
  }
  r.e_p = mean_cer(g.trials);
  r.e_o = e_o;
  r.dpd = dpd(r.d_p, r.e_p, r.e_o);
  r.trials = g.trials.size();
  return r;
}

void mark_best(std::vector<DpdRecord>& records) {
  if (!records.empty()) records[best_index(records)].selected = true;
}

}  // namespace

double mean_cer(std::span<const Measurement> trials) {
  if (trials.empty()) throw UsageError("mean_cer: no trials");
  std::vector<const Measurement*> order;
  order.reserve(trials.size());
  for (const auto& t : trials) order.push_back(&t);
  std::sort(order.begin(), order.end(), [](const Measurement* a, const Measurement* b) {
    return std::tie(a->utt_id, a->repeat) < std::tie(b->utt_id, b->repeat);
  });
  // Neumaier summation.
  double sum = 0.0;
  double comp = 0.0;
  for (const auto* t : order) {
    const double v = t->cer;
    const double s = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - s) + v : (v - s) + sum;
    sum = s;
  }
  return (sum + comp) / static_cast<double>(order.size());
}

std::vector<DpdRecord> policy_records(PolicyKind kind, std::span<const Measurement> rows,
                                      const DatasetStats& stats, double e_o,
                                      const ReportOptions& options,
                                      std::vector<std::string>* notes) {
  const std::string_view tag = augment::tag(kind);
  std::map<std::string, Group> groups;
  std::set<std::tuple<std::string, std::string, int>> seen;
  for (const auto& m : rows) {
    if (m.policy != tag) continue;
    PolicyParams p;
    try {
      p = augment::parse_params(kind, m.param_repr);
      augment::validate(p);
    } catch (const UsageError& e) {
      throw ParseError("measurements", m.line, e.what());
    }
    const std::string canonical = augment::format_params(p);
    if (!seen.emplace(canonical, m.utt_id, m.repeat).second)
      throw ParseError("measurements", m.line,
                       fmt::format("duplicate trial {} {} {} repeat {}", m.policy, canonical,
                                   m.utt_id, m.repeat));
    auto& g = groups[canonical];
    g.param = p;
    g.trials.push_back(m);
  }

  std::vector<const Group*> ordered;
  for (const auto& [_, g] : groups) ordered.push_back(&g);
  std::sort(ordered.begin(), ordered.end(), [](const Group* a, const Group* b) {
    return sort_key(a->param) < sort_key(b->param);
  });

  std::vector<DpdRecord> stage1;
  std::vector<DpdRecord> stage2;
  if (!is_mask(kind)) {
    for (const auto* g : ordered)
      stage1.push_back(make_record(kind, Stage::Single, *g, stats, e_o, options));
    mark_best(stage1);
    return stage1;
  }

  for (const auto* g : ordered)
    if (mask_shape(g->param).second == 1)
      stage1.push_back(make_record(kind, Stage::Single, *g, stats, e_o, options));
  mark_best(stage1);

  int product = 0;
  if (!stage1.empty())
    product = mask_shape(stage1[best_index(stage1)].param).first;
  for (const auto* g : ordered) {
    const auto [w, n] = mask_shape(g->param);
    if (product > 0 && w * n == product) {
      stage2.push_back(make_record(kind, Stage::Pairs, *g, stats, e_o, options));
    } else if (n != 1 && notes) {
      notes->push_back(fmt::format("{} {}: not a stage-2 candidate for width {}, ignored", tag,
                                   augment::format_params(g->param), product));
    }
  }
  std::sort(stage2.begin(), stage2.end(), [](const DpdRecord& a, const DpdRecord& b) {
    return mask_shape(a.param) < mask_shape(b.param);
  });
  mark_best(stage2);

  stage1.insert(stage1.end(), stage2.begin(), stage2.end());
  return stage1;
}

Report build_report(std::span<const Measurement> rows, const DatasetStats& stats,
                    const ReportOptions& options) {
  if (rows.empty()) throw UsageError("report: empty measurement set");
  stats.validate();
  std::vector<Measurement> baseline;
  std::set<std::string> known = {std::string(kBaselinePolicy)};
  for (auto k : augment::kAllPolicies) known.emplace(augment::tag(k));
  for (const auto& m : rows) {
    if (!known.contains(m.policy))
      throw ParseError("measurements", m.line, fmt::format("unknown policy '{}'", m.policy));
    if (m.policy == kBaselinePolicy) baseline.push_back(m);
  }
  if (baseline.empty()) throw UsageError("report: no baseline rows, cannot compute E_o");

  Report report;
  report.e_o = mean_cer(baseline);
  for (auto k : augment::kAllPolicies) {
    if (!options.policies.empty() &&
        std::find(options.policies.begin(), options.policies.end(), k) == options.policies.end())
      continue;
    auto recs = policy_records(k, rows, stats, report.e_o, options, &report.notes);
    for (const auto& r : recs)
      if (r.dpd.infinite)
        report.notes.push_back(fmt::format("{} {}: E_p == E_o, DPD infinite",
                                           augment::tag(k), augment::format_params(r.param)));
    report.records.insert(report.records.end(), recs.begin(), recs.end());
  }
  return report;
}

std::string report_policy_label(const DpdRecord& r) {
  std::string label(augment::tag(r.policy));
  if (r.stage == Stage::Pairs) label += "_pairs";
  return label;
}

std::string format_report(const Report& report) {
  std::string out = "policy\tparam_repr\td_p\te_p\te_o\tdpd\tselected\tinfinite_flag\n";
  for (const auto& r : report.records) {
    const std::string dpd_text = r.dpd.infinite ? "inf" : fmt::format("{:.6f}", r.dpd.value);
    out += fmt::format("{}\t{}\t{:.6f}\t{:.6f}\t{:.6f}\t{}\t{}\t{}\n", report_policy_label(r),
                       augment::format_params(r.param), r.d_p, r.e_p, r.e_o, dpd_text,
                       r.selected ? 1 : 0, r.dpd.infinite ? 1 : 0);
  }
  return out;
}

void write_report(const std::filesystem::path& path, const Report& report) {
  write_file_atomic(path, format_report(report));
}

}  // namespace melaug::search
