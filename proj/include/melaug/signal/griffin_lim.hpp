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

#include <vector>

#include <Eigen/Core>

#include "melaug/signal/mel.hpp"
#include "melaug/types.hpp"

namespace melaug::signal {

inline constexpr int kDefaultGriffinLimIterations = 60;
inline constexpr double kOutputPeak = 0.95;

/// Maps a log-mel spectrogram back to a non-negative linear STFT magnitude
/// with the minimum-norm least-squares solution of `weights * S = mel`,
/// clamped at zero. Cells at the log floor are treated as zero energy.
Eigen::MatrixXd mel_to_linear(const MelSpectrogram& m, const MelFilterbank& fb);

struct GriffinLimTrace {
  Waveform waveform;  // peak-normalized
  /// ||STFT(x_k)| - target|, two-sided Frobenius norm, for k = 0..iterations,
  /// measured on the iterates before peak normalization.
  std::vector<double> consistency_errors;
};

/// Griffin-Lim phase reconstruction (zero initial phase, no momentum).
GriffinLimTrace griffin_lim_trace(const Eigen::MatrixXd& magnitude,
                                  const MelConfig& cfg, int iterations);
GriffinLimTrace griffin_lim_trace(const MelSpectrogram& m, int iterations);

Waveform griffin_lim(const MelSpectrogram& m,
                     int iterations = kDefaultGriffinLimIterations);

}  // namespace melaug::signal
