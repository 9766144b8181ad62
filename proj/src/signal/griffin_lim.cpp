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

#include "melaug/signal/griffin_lim.hpp"

#include <cmath>

#include <Eigen/QR>

#include "melaug/error.hpp"
#include "melaug/signal/stft.hpp"

namespace melaug::signal {

Eigen::MatrixXd mel_to_linear(const MelSpectrogram& m, const MelFilterbank& fb) {
  if (m.nu() != fb.nu()) throw DimensionMismatch("mel_to_linear: bin count mismatch");
  const float floor_value = static_cast<float>(std::log(m.meta.log_floor));
  const Eigen::MatrixXd mel =
      (m.values.array() > floor_value)
          .select(m.values.cast<double>().array().exp(), 0.0)
          .matrix();
  if (mel.isZero(0.0)) return Eigen::MatrixXd::Zero(fb.bins(), m.tau());
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(fb.weights);
  return cod.solve(mel).cwiseMax(0.0);
}

GriffinLimTrace griffin_lim_trace(const Eigen::MatrixXd& magnitude,
                                  const MelConfig& cfg, int iterations) {
  if (iterations < 1) throw ParamOutOfRange("griffin_lim: iterations must be >= 1");
  const Stft stft(cfg.n_fft, cfg.hop);
  if (magnitude.rows() != stft.bins())
    throw DimensionMismatch("griffin_lim: magnitude has wrong bin count");

  GriffinLimTrace trace;
  trace.waveform.sample_rate = cfg.sample_rate;
  trace.consistency_errors.reserve(static_cast<std::size_t>(iterations) + 1);

  Eigen::MatrixXcd target = magnitude.cast<std::complex<double>>();
  Eigen::ArrayXd x = stft.inverse(target);
  for (int k = 0;; ++k) {
    const Eigen::MatrixXcd estimate = stft.forward(x);
    const Eigen::MatrixXd mag = estimate.cwiseAbs();
    trace.consistency_errors.push_back(two_sided_norm(mag - magnitude, cfg.n_fft));
    if (k == iterations) break;
    for (Index i = 0; i < target.size(); ++i) {
      const double a = mag.data()[i];
      target.data()[i] = a > 0.0 ? estimate.data()[i] * (magnitude.data()[i] / a)
                                 : std::complex<double>(magnitude.data()[i], 0.0);
    }
    x = stft.inverse(target);
  }

  // Iterates use the least-squares inverse; the returned audio is rendered
  // from the last target with edge fades.
  x = stft.inverse(target, IstftScaling::SteadyState);
  const double peak = x.size() > 0 ? x.abs().maxCoeff() : 0.0;
  if (peak < 1e-6) {
    trace.waveform.samples = Eigen::ArrayXd::Zero(x.size());
  } else {
    trace.waveform.samples = x * (kOutputPeak / peak);
  }
  return trace;
}

GriffinLimTrace griffin_lim_trace(const MelSpectrogram& m, int iterations) {
  const MelConfig cfg = config_of(m);
  const MelFilterbank fb = make_filterbank(cfg);
  return griffin_lim_trace(mel_to_linear(m, fb), cfg, iterations);
}

Waveform griffin_lim(const MelSpectrogram& m, int iterations) {
  return griffin_lim_trace(m, iterations).waveform;
}

}  // namespace melaug::signal
