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

#include "melaug/augment/policies.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "melaug/augment/resample.hpp"
#include "melaug/error.hpp"

namespace melaug::augment {
namespace {

constexpr Index kMinWarpAxis = 8;

void require_warp_axis(Index n, const char* what) {
  if (n < kMinWarpAxis)
    throw InputTooShort(std::string(what) + ": axis has " + std::to_string(n) +
                        " samples, need at least " + std::to_string(kMinWarpAxis));
}

/// Source point from [n/4, n - n/4], moved point kept inside [1, n-2].
WarpDraw clamp_draw(Index n, WarpDraw d) {
  const double lo = 1.0 - static_cast<double>(d.source);
  const double hi = static_cast<double>(n - 2 - d.source);
  d.distance = std::clamp(d.distance, lo, hi);
  return d;
}

Index draw_source(Rng& rng, Index n) {
  const Index quarter = n / 4;
  return rng.uniform_int(quarter, n - quarter);
}

}  // namespace

WarpDraw draw_time_warp(Index tau, double max_fraction, AugSeed seed) {
  require_warp_axis(tau, "time_warp");
  validate(TimeWarp{max_fraction});
  Rng rng(seed);
  WarpDraw d;
  d.source = draw_source(rng, tau);
  const double bound = max_fraction * static_cast<double>(tau);
  d.distance = rng.uniform_real(-bound, bound);
  return clamp_draw(tau, d);
}

MelSpectrogram time_warp(const MelSpectrogram& m, WarpDraw draw) {
  require_warp_axis(m.tau(), "time_warp");
  if (draw.source < 1 || draw.source > m.tau() - 2)
    throw ParamOutOfRange("time_warp: source frame must be interior");
  draw = clamp_draw(m.tau(), draw);
  if (draw.distance == 0.0) return m;
  const auto src = static_cast<double>(draw.source);
  MelSpectrogram out{
      resample_cols(m.values, m.tau(), TwoSegmentMap{m.tau(), src, src + draw.distance}),
      m.meta};
  out.values.col(0) = m.values.col(0);
  out.values.col(m.tau() - 1) = m.values.col(m.tau() - 1);
  return out;
}

MelSpectrogram time_warp(const MelSpectrogram& m, double max_fraction, AugSeed seed) {
  return time_warp(m, draw_time_warp(m.tau(), max_fraction, seed));
}

WarpDraw draw_freq_warp(Index nu, int max_bins, AugSeed seed) {
  require_warp_axis(nu, "freq_warp");
  validate(FreqWarp{max_bins});
  Rng rng(seed);
  WarpDraw d;
  d.source = draw_source(rng, nu);
  d.distance = static_cast<double>(rng.uniform_int(-max_bins, max_bins));
  return clamp_draw(nu, d);
}

MelSpectrogram freq_warp(const MelSpectrogram& m, WarpDraw draw) {
  require_warp_axis(m.nu(), "freq_warp");
  if (draw.source < 1 || draw.source > m.nu() - 2)
    throw ParamOutOfRange("freq_warp: source bin must be interior");
  draw = clamp_draw(m.nu(), draw);
  if (draw.distance == 0.0) return m;
  const auto src = static_cast<double>(draw.source);
  MelSpectrogram out{
      resample_rows(m.values, m.nu(), TwoSegmentMap{m.nu(), src, src + draw.distance}),
      m.meta};
  out.values.row(0) = m.values.row(0);
  out.values.row(m.nu() - 1) = m.values.row(m.nu() - 1);
  return out;
}

MelSpectrogram freq_warp(const MelSpectrogram& m, int max_bins, AugSeed seed) {
  return freq_warp(m, draw_freq_warp(m.nu(), max_bins, seed));
}

std::vector<MaskDraw> draw_masks(Index axis, int max_width, int count, AugSeed seed) {
  if (max_width < 0 || count < 1) throw ParamOutOfRange("mask: need width >= 0 and count >= 1");
  if (max_width > axis)
    throw ParamOutOfRange("mask: width bound " + std::to_string(max_width) +
                          " exceeds axis length " + std::to_string(axis));
  Rng rng(seed);
  std::vector<MaskDraw> out(static_cast<std::size_t>(count));
  for (auto& d : out) {
    d.width = rng.uniform_int(0, max_width);
    d.start = rng.uniform_int(0, axis - d.width);
  }
  return out;
}

MelSpectrogram apply_freq_masks(const MelSpectrogram& m, std::span<const MaskDraw> masks) {
  MelSpectrogram out = m;
  if (m.values.size() == 0) return out;
  const float lowest = m.values.minCoeff();
  for (const auto& d : masks) {
    if (d.start < 0 || d.width < 0 || d.start + d.width > m.nu())
      throw ParamOutOfRange("freq mask outside spectrogram");
    out.values.middleRows(d.start, d.width).setConstant(lowest);
  }
  return out;
}

MelSpectrogram apply_time_masks(const MelSpectrogram& m, std::span<const MaskDraw> masks) {
  MelSpectrogram out = m;
  if (m.values.size() == 0) return out;
  const float lowest = m.values.minCoeff();
  for (const auto& d : masks) {
    if (d.start < 0 || d.width < 0 || d.start + d.width > m.tau())
      throw ParamOutOfRange("time mask outside spectrogram");
    out.values.middleCols(d.start, d.width).setConstant(lowest);
  }
  return out;
}

MelSpectrogram freq_mask(const MelSpectrogram& m, int max_width, int count, AugSeed seed) {
  return apply_freq_masks(m, draw_masks(m.nu(), max_width, count, seed));
}

MelSpectrogram time_mask(const MelSpectrogram& m, int max_width, int count, AugSeed seed) {
  return apply_time_masks(m, draw_masks(m.tau(), max_width, count, seed));
}

double draw_loudness(double max_lambda, AugSeed seed) {
  validate(LoudnessCtl{max_lambda});
  Rng rng(seed);
  return rng.uniform_real(0.0, max_lambda);
}

MelSpectrogram loudness_ctl_at(const MelSpectrogram& m, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw ParamOutOfRange("loudness: lambda must be in [0, 1]");
  if (lambda == 0.0 || m.values.size() == 0) return m;
  const double lowest = m.values.minCoeff();
  return {contract_toward(m.values, lowest, 1.0 - lambda), m.meta};
}

MelSpectrogram loudness_ctl(const MelSpectrogram& m, double max_lambda, AugSeed seed) {
  return loudness_ctl_at(m, draw_loudness(max_lambda, seed));
}

double draw_time_len(Index tau, double max_fraction, AugSeed seed) {
  validate(TimeLenCtl{max_fraction});
  Rng rng(seed);
  const double bound = max_fraction * static_cast<double>(tau);
  return rng.uniform_real(-bound, bound);
}

Index time_len_target(Index tau, double l) {
  return std::max<Index>(2, std::llround(static_cast<double>(tau) + l));
}

MelSpectrogram resample_time(const MelSpectrogram& m, Index new_tau) {
  if (m.tau() < 2) throw InputTooShort("time length control: need at least 2 frames");
  if (new_tau < 2) throw ParamOutOfRange("time length control: target length must be >= 2");
  if (new_tau == m.tau()) return m;
  return {resample_cols(m.values, new_tau, UniformMap{m.tau(), new_tau}), m.meta};
}

TimeLenResult time_len_ctl_at(const MelSpectrogram& m, double l) {
  return {resample_time(m, time_len_target(m.tau(), l)), l};
}

TimeLenResult time_len_ctl(const MelSpectrogram& m, double max_fraction, AugSeed seed) {
  if (m.tau() < 2) throw InputTooShort("time length control: need at least 2 frames");
  return time_len_ctl_at(m, draw_time_len(m.tau(), max_fraction, seed));
}

double draw_length_ratio(double max_fraction, AugSeed seed) {
  validate(TimeLenCtl{max_fraction});
  Rng rng(seed);
  return rng.uniform_real(-max_fraction, max_fraction);
}

PairResult time_len_ctl_pair_at(const MelSpectrogram& source, const MelSpectrogram& target,
                                double ratio) {
  auto scaled = [ratio](Index tau) {
    return std::max<Index>(2, std::llround(static_cast<double>(tau) * (1.0 + ratio)));
  };
  return {resample_time(source, scaled(source.tau())),
          resample_time(target, scaled(target.tau())), ratio};
}

PairResult time_len_ctl_pair(const MelSpectrogram& source, const MelSpectrogram& target,
                             double max_fraction, AugSeed seed) {
  return time_len_ctl_pair_at(source, target, draw_length_ratio(max_fraction, seed));
}

MelSpectrogram apply(const MelSpectrogram& m, const PolicyParams& p, AugSeed seed) {
  validate(p);
  switch (kind_of(p)) {
    case PolicyKind::TimeWarp:
      return time_warp(m, std::get<TimeWarp>(p).max_fraction, seed);
    case PolicyKind::FreqMask: {
      const auto& q = std::get<FreqMask>(p);
      return freq_mask(m, q.max_width, q.count, seed);
    }
    case PolicyKind::TimeMask: {
      const auto& q = std::get<TimeMask>(p);
      return time_mask(m, q.max_width, q.count, seed);
    }
    case PolicyKind::FreqWarp:
      return freq_warp(m, std::get<FreqWarp>(p).max_bins, seed);
    case PolicyKind::LoudnessCtl:
      return loudness_ctl(m, std::get<LoudnessCtl>(p).max_lambda, seed);
    case PolicyKind::TimeLenCtl:
      return time_len_ctl(m, std::get<TimeLenCtl>(p).max_fraction, seed).mel;
  }
  return m;
}

}  // namespace melaug::augment
