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

#include "melaug/signal/stft.hpp"

#include <complex>
#include <numbers>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "melaug/error.hpp"

namespace melaug::signal {

Eigen::ArrayXd hann_window(Index n) {
  Eigen::ArrayXd w(n);
  for (Index i = 0; i < n; ++i)
    w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                static_cast<double>(n));
  return w;
}

Stft::Stft(Index n_fft, Index hop) : n_fft_(n_fft), hop_(hop) {
  if (n_fft < 2 || n_fft % 2 != 0) throw UsageError("stft: n_fft must be even and >= 2");
  if (hop < 1) throw UsageError("stft: hop must be >= 1");
  window_ = hann_window(n_fft);
}

Eigen::MatrixXcd Stft::forward(const Eigen::ArrayXd& x) const {
  const Index frames = frame_count(x.size(), n_fft_, hop_);
  Eigen::MatrixXcd spec(bins(), frames);
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::HalfSpectrum);
  std::vector<double> frame(static_cast<std::size_t>(n_fft_));
  std::vector<std::complex<double>> out;
  for (Index t = 0; t < frames; ++t) {
    for (Index i = 0; i < n_fft_; ++i) frame[i] = x[t * hop_ + i] * window_[i];
    fft.fwd(out, frame);
    for (Index k = 0; k < bins(); ++k) spec(k, t) = out[k];
  }
  return spec;
}

Eigen::ArrayXd Stft::inverse(const Eigen::MatrixXcd& spec, IstftScaling scaling) const {
  if (spec.rows() != bins()) throw DimensionMismatch("istft: bin count mismatch");
  const Index frames = spec.cols();
  if (frames == 0) return {};
  const Index length = (frames - 1) * hop_ + n_fft_;
  Eigen::ArrayXd num = Eigen::ArrayXd::Zero(length);
  Eigen::ArrayXd den = Eigen::ArrayXd::Zero(length);
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::HalfSpectrum);
  std::vector<std::complex<double>> half(static_cast<std::size_t>(bins()));
  std::vector<double> frame;
  for (Index t = 0; t < frames; ++t) {
    for (Index k = 0; k < bins(); ++k) half[k] = spec(k, t);
    // A real signal has real DC and Nyquist bins.
    half.front().imag(0.0);
    half.back().imag(0.0);
    fft.inv(frame, half, n_fft_);
    for (Index i = 0; i < n_fft_; ++i) {
      num[t * hop_ + i] += window_[i] * frame[i];
      den[t * hop_ + i] += window_[i] * window_[i];
    }
  }
  if (scaling == IstftScaling::SteadyState) return num / den.max(den.maxCoeff());
  return (den > 0.0).select(num / den.max(1e-300), 0.0);
}

double two_sided_norm(const Eigen::MatrixXd& one_sided, Index n_fft) {
  const Index bins = n_fft / 2 + 1;
  if (one_sided.rows() != bins) throw DimensionMismatch("two_sided_norm: bin count mismatch");
  double acc = one_sided.row(0).squaredNorm() + one_sided.row(bins - 1).squaredNorm();
  if (bins > 2) acc += 2.0 * one_sided.middleRows(1, bins - 2).squaredNorm();
  return std::sqrt(acc);
}

}  // namespace melaug::signal
