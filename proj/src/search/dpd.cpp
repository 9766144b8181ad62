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

#include "melaug/search/dpd.hpp"

#include <cmath>
#include <limits>

#include "melaug/error.hpp"

namespace melaug::search {

void DatasetStats::validate() const {
  if (!(mean_tau > 0.0)) throw ConfigError("dataset stats: E(tau) must be positive");
  if (nu < 1) throw ConfigError("dataset stats: nu must be >= 1");
}

double deformation_ratio(const PolicyParams& p, const DatasetStats& stats) {
  stats.validate();
  using namespace augment;
  switch (kind_of(p)) {
    case PolicyKind::TimeMask: {
      const auto& q = std::get<TimeMask>(p);
      return static_cast<double>(q.max_width) * q.count / stats.mean_tau;
    }
    case PolicyKind::FreqMask: {
      const auto& q = std::get<FreqMask>(p);
      return static_cast<double>(q.max_width) * q.count / stats.nu;
    }
    case PolicyKind::TimeWarp: return std::get<TimeWarp>(p).max_fraction;
    case PolicyKind::FreqWarp:
      return static_cast<double>(std::get<FreqWarp>(p).max_bins) / stats.nu;
    case PolicyKind::TimeLenCtl: return std::get<TimeLenCtl>(p).max_fraction;
    case PolicyKind::LoudnessCtl: return std::get<LoudnessCtl>(p).max_lambda;
  }
  return 0.0;
}

DpdValue dpd(double d_p, double e_p, double e_o) {
  if (!(d_p >= 0.0) || !(e_p >= 0.0) || !(e_o >= 0.0))
    throw ParamOutOfRange("dpd: inputs must be non-negative");
  const double deterioration = std::abs(e_p - e_o);
  if (deterioration == 0.0) return {std::numeric_limits<double>::infinity(), true};
  return {d_p / deterioration, false};
}

bool ranks_above(const DpdRecord& a, const DpdRecord& b) {
  if (a.dpd.infinite != b.dpd.infinite) return a.dpd.infinite;
  if (!a.dpd.infinite && a.dpd.value != b.dpd.value) return a.dpd.value > b.dpd.value;
  if (a.d_p != b.d_p) return a.d_p > b.d_p;
  return augment::format_params(a.param) < augment::format_params(b.param);
}

std::size_t best_index(std::span<const DpdRecord> records) {
  if (records.empty()) throw UsageError("best_index: no records");
  std::size_t best = 0;
  for (std::size_t i = 1; i < records.size(); ++i)
    if (ranks_above(records[i], records[best])) best = i;
  return best;
}

std::vector<std::pair<int, int>> divisor_pairs(int product) {
  if (product < 1) throw ParamOutOfRange("divisor_pairs: product must be >= 1");
  std::vector<std::pair<int, int>> out;
  for (int w = 1; w <= product; ++w)
    if (product % w == 0) out.emplace_back(w, product / w);
  return out;
}

}  // namespace melaug::search
