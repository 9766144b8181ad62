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

#include "melaug/types.hpp"

namespace melaug::signal {

/// Slaney-style mel scale: linear below 1 kHz, logarithmic above.
double hz_to_mel(double hz);
double mel_to_hz(double mel);

/// Triangular mel filters with area (Slaney) normalization.
struct MelFilterbank {
  Eigen::MatrixXd weights;                // n_mels x (n_fft/2 + 1)
  std::vector<double> break_frequencies;  // n_mels + 2 edges, Hz

  Index nu() const { return weights.rows(); }
  Index bins() const { return weights.cols(); }
};

MelFilterbank make_filterbank(const MelConfig& cfg);

/// log(max(filterbank * |STFT|, log_floor)) over Hann-windowed frames.
MelSpectrogram extract_mel(const Waveform& w, const MelConfig& cfg);
MelSpectrogram extract_mel(const Waveform& w, const MelConfig& cfg,
                           const MelFilterbank& fb);

/// The extraction config a spectrogram was produced with; n_mels comes from
/// the row count.
MelConfig config_of(const MelSpectrogram& m);

}  // namespace melaug::signal
