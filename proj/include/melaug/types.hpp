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

#include <cstdint>

#include <Eigen/Core>

namespace melaug {

using Index = Eigen::Index;

/// Mono audio, amplitudes in [-1, 1].
struct Waveform {
  Eigen::ArrayXd samples;
  int sample_rate = 22050;

  Index size() const { return samples.size(); }
};

/// Front-end settings for log-mel extraction.
struct MelConfig {
  int sample_rate = 22050;
  int n_fft = 1024;
  int hop = 256;
  int n_mels = 80;
  double fmin = 0.0;
  double fmax = 8000.0;
  double log_floor = 1e-5;

  void validate() const;
};

/// Extraction metadata carried alongside the log-mel values.
struct MelMeta {
  double sample_rate = 22050.0;
  std::uint32_t n_fft = 1024;
  std::uint32_t hop = 256;
  double fmin = 0.0;
  double fmax = 8000.0;
  double log_floor = 1e-5;

  friend bool operator==(const MelMeta&, const MelMeta&) = default;

  static MelMeta from(const MelConfig& cfg) {
    return {static_cast<double>(cfg.sample_rate),
            static_cast<std::uint32_t>(cfg.n_fft),
            static_cast<std::uint32_t>(cfg.hop),
            cfg.fmin,
            cfg.fmax,
            cfg.log_floor};
  }
};

/// Log-mel spectrogram stored as a (mel bins x frames) matrix. Eigen's
/// column-major layout keeps each frame contiguous.
template <typename Scalar>
struct BasicMelSpectrogram {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Matrix values;
  MelMeta meta;

  Index nu() const { return values.rows(); }
  Index tau() const { return values.cols(); }

  friend bool operator==(const BasicMelSpectrogram& a,
                         const BasicMelSpectrogram& b) {
    return a.meta == b.meta && a.values.rows() == b.values.rows() &&
           a.values.cols() == b.values.cols() &&
           (a.values.array() == b.values.array()).all();
  }
};

using MelSpectrogram = BasicMelSpectrogram<float>;

}  // namespace melaug
