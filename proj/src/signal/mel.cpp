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

#include "melaug/signal/mel.hpp"

#include <algorithm>
#include <cmath>

#include "melaug/error.hpp"
#include "melaug/signal/stft.hpp"

namespace melaug {

void MelConfig::validate() const {
  if (sample_rate <= 0) throw ConfigError("mel: sample_rate must be positive");
  if (n_fft < 2 || n_fft % 2 != 0) throw ConfigError("mel: n_fft must be even and >= 2");
  if (hop < 1) throw ConfigError("mel: hop must be >= 1");
  if (n_mels < 1) throw ConfigError("mel: n_mels must be >= 1");
  if (fmin < 0.0 || fmax <= fmin) throw ConfigError("mel: need 0 <= fmin < fmax");
  if (fmax > sample_rate / 2.0) throw ConfigError("mel: fmax above Nyquist");
  if (!(log_floor > 0.0)) throw ConfigError("mel: log_floor must be positive");
}

}  // namespace melaug

namespace melaug::signal {
namespace {

constexpr double kLinearHzPerMel = 200.0 / 3.0;
constexpr double kLogRegionHz = 1000.0;
constexpr double kLogRegionMel = kLogRegionHz / kLinearHzPerMel;
const double kLogStep = std::log(6.4) / 27.0;

}  // namespace

double hz_to_mel(double hz) {
  if (hz < kLogRegionHz) return hz / kLinearHzPerMel;
  return kLogRegionMel + std::log(hz / kLogRegionHz) / kLogStep;
}

double mel_to_hz(double mel) {
  if (mel < kLogRegionMel) return mel * kLinearHzPerMel;
  return kLogRegionHz * std::exp(kLogStep * (mel - kLogRegionMel));
}

MelFilterbank make_filterbank(const MelConfig& cfg) {
  cfg.validate();
  const Index bins = cfg.n_fft / 2 + 1;
  const Index n = cfg.n_mels;
  MelFilterbank fb;
  fb.break_frequencies.resize(static_cast<std::size_t>(n + 2));
  const double lo = hz_to_mel(cfg.fmin);
  const double hi = hz_to_mel(cfg.fmax);
  for (Index i = 0; i < n + 2; ++i)
    fb.break_frequencies[i] = mel_to_hz(lo + (hi - lo) * static_cast<double>(i) /
                                                 static_cast<double>(n + 1));

  fb.weights = Eigen::MatrixXd::Zero(n, bins);
  const double bin_hz = static_cast<double>(cfg.sample_rate) / cfg.n_fft;
  for (Index m = 0; m < n; ++m) {
    const double left = fb.break_frequencies[m];
    const double center = fb.break_frequencies[m + 1];
    const double right = fb.break_frequencies[m + 2];
    const double norm = 2.0 / (right - left);
    for (Index k = 0; k < bins; ++k) {
      const double f = static_cast<double>(k) * bin_hz;
      const double rise = (f - left) / (center - left);
      const double fall = (right - f) / (right - center);
      fb.weights(m, k) = norm * std::max(0.0, std::min(rise, fall));
    }
    if (fb.weights.row(m).maxCoeff() <= 0.0)
      throw ConfigError("mel: filter " + std::to_string(m) +
                        " covers no FFT bin; reduce n_mels or raise n_fft");
  }
  return fb;
}

MelSpectrogram extract_mel(const Waveform& w, const MelConfig& cfg) {
  return extract_mel(w, cfg, make_filterbank(cfg));
}

MelSpectrogram extract_mel(const Waveform& w, const MelConfig& cfg,
                           const MelFilterbank& fb) {
  cfg.validate();
  if (w.sample_rate != cfg.sample_rate)
    throw FormatError("extract_mel: sample rate " + std::to_string(w.sample_rate) +
                      " Hz does not match configured " +
                      std::to_string(cfg.sample_rate) + " Hz");
  if (w.size() < cfg.n_fft)
    throw InputTooShort("extract_mel: audio has " + std::to_string(w.size()) +
                        " samples, fewer than one frame of " +
                        std::to_string(cfg.n_fft));
  if (fb.nu() != cfg.n_mels || fb.bins() != cfg.n_fft / 2 + 1)
    throw DimensionMismatch("extract_mel: filterbank does not match config");

  const Stft stft(cfg.n_fft, cfg.hop);
  const Eigen::MatrixXd magnitude = stft.forward(w.samples).cwiseAbs();
  const Eigen::MatrixXd mel = fb.weights * magnitude;

  MelSpectrogram out;
  out.meta = MelMeta::from(cfg);
  out.values = mel.array().max(cfg.log_floor).log().cast<float>();
  return out;
}

MelConfig config_of(const MelSpectrogram& m) {
  MelConfig cfg;
  cfg.sample_rate = static_cast<int>(m.meta.sample_rate);
  cfg.n_fft = static_cast<int>(m.meta.n_fft);
  cfg.hop = static_cast<int>(m.meta.hop);
  cfg.n_mels = static_cast<int>(m.nu());
  cfg.fmin = m.meta.fmin;
  cfg.fmax = m.meta.fmax;
  cfg.log_floor = m.meta.log_floor;
  return cfg;
}

}  // namespace melaug::signal
