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

#include <span>
#include <vector>

#include "melaug/augment/params.hpp"
#include "melaug/augment/rng.hpp"
#include "melaug/types.hpp"

namespace melaug::augment {

// Each seeded policy is split into a draw (pure function of the seed and the
// axis sizes) and a deterministic transform, so tests can force draws.

/// Interior point moved along an axis; distance already clamped so the
/// moved point stays at least one sample away from both ends.
struct WarpDraw {
  Index source = 0;
  double distance = 0.0;
};

/// Contiguous band [start, start + width) along one axis.
struct MaskDraw {
  Index start = 0;
  Index width = 0;
};

WarpDraw draw_time_warp(Index tau, double max_fraction, AugSeed seed);
MelSpectrogram time_warp(const MelSpectrogram& m, WarpDraw draw);
MelSpectrogram time_warp(const MelSpectrogram& m, double max_fraction, AugSeed seed);

WarpDraw draw_freq_warp(Index nu, int max_bins, AugSeed seed);
MelSpectrogram freq_warp(const MelSpectrogram& m, WarpDraw draw);
MelSpectrogram freq_warp(const MelSpectrogram& m, int max_bins, AugSeed seed);

/// `count` draws of width ~ U{0..max_width} and start ~ U{0..axis-width}.
std::vector<MaskDraw> draw_masks(Index axis, int max_width, int count, AugSeed seed);
MelSpectrogram apply_freq_masks(const MelSpectrogram& m, std::span<const MaskDraw> masks);
MelSpectrogram apply_time_masks(const MelSpectrogram& m, std::span<const MaskDraw> masks);
MelSpectrogram freq_mask(const MelSpectrogram& m, int max_width, int count, AugSeed seed);
MelSpectrogram time_mask(const MelSpectrogram& m, int max_width, int count, AugSeed seed);

double draw_loudness(double max_lambda, AugSeed seed);
/// (x - min) * (1 - lambda) + min.
MelSpectrogram loudness_ctl_at(const MelSpectrogram& m, double lambda);
MelSpectrogram loudness_ctl(const MelSpectrogram& m, double max_lambda, AugSeed seed);

struct TimeLenResult {
  MelSpectrogram mel;
  double drawn_l = 0.0;
};

double draw_time_len(Index tau, double max_fraction, AugSeed seed);
/// max(2, round(tau + l)), rounding halves away from zero.
Index time_len_target(Index tau, double l);
/// Linear resampling of the whole time axis onto `new_tau` frames.
MelSpectrogram resample_time(const MelSpectrogram& m, Index new_tau);
TimeLenResult time_len_ctl_at(const MelSpectrogram& m, double l);
TimeLenResult time_len_ctl(const MelSpectrogram& m, double max_fraction, AugSeed seed);

struct PairResult {
  MelSpectrogram source;
  MelSpectrogram target;
  double ratio = 0.0;
};

/// One relative ratio r ~ U[-L, L] applied to both utterances, so a paired
/// source/target keeps the same speed change.
double draw_length_ratio(double max_fraction, AugSeed seed);
PairResult time_len_ctl_pair_at(const MelSpectrogram& source, const MelSpectrogram& target,
                                double ratio);
PairResult time_len_ctl_pair(const MelSpectrogram& source, const MelSpectrogram& target,
                             double max_fraction, AugSeed seed);

/// Dispatches to the policy selected by `p`.
MelSpectrogram apply(const MelSpectrogram& m, const PolicyParams& p, AugSeed seed);

}  // namespace melaug::augment
