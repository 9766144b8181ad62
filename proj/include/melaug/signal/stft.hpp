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

#include <Eigen/Core>

#include "melaug/types.hpp"

namespace melaug::signal {

/// Periodic Hann window of length n.
Eigen::ArrayXd hann_window(Index n);

/// Number of full frames that fit in `length` samples (no padding).
inline Index frame_count(Index length, Index n_fft, Index hop) {
  return length < n_fft ? 0 : 1 + (length - n_fft) / hop;
}

/// Short-time Fourier transform with a Hann analysis window and no edge
/// padding. Returns a one-sided (n_fft/2+1) x frames complex matrix.
/// Denominator of the overlap-add inverse. LeastSquares divides by the
/// per-sample window-square sum; SteadyState never divides by less than its
/// interior value, so edge samples covered by few frames fade out instead
/// of being amplified by 1/w.
enum class IstftScaling { LeastSquares, SteadyState };

class Stft {
 public:
  Stft(Index n_fft, Index hop);

  Index n_fft() const { return n_fft_; }
  Index hop() const { return hop_; }
  Index bins() const { return n_fft_ / 2 + 1; }
  const Eigen::ArrayXd& window() const { return window_; }

  Eigen::MatrixXcd forward(const Eigen::ArrayXd& x) const;

  /// Least-squares inverse: the signal whose STFT is closest (in the
  /// two-sided Frobenius norm) to `spec`. Output length (frames-1)*hop+n_fft.
  Eigen::ArrayXd inverse(const Eigen::MatrixXcd& spec,
                         IstftScaling scaling = IstftScaling::LeastSquares) const;

 private:
  Index n_fft_;
  Index hop_;
  Eigen::ArrayXd window_;
};

/// Frobenius norm over the full two-sided spectrum of a one-sided matrix:
/// interior bins count twice, DC and Nyquist once.
double two_sided_norm(const Eigen::MatrixXd& one_sided, Index n_fft);

}  // namespace melaug::signal
