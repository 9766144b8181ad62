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

#include <cmath>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "melaug/types.hpp"

namespace melaug::metrics {

inline constexpr int kDefaultMcdOrder = 13;

/// Mel-cepstral frames, one D-dimensional column per frame (c0 in row 0).
struct McepSequence {
  Eigen::MatrixXd frames;

  Index dim() const { return frames.rows(); }
  Index size() const { return frames.cols(); }
};

/// (10 / ln 10) * sqrt(2 * sum_{k>=1} (x[k] - y[k])^2); c0 is excluded.
template <typename DerivedX, typename DerivedY>
double frame_distance(const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedY>& y) {
  const Index d = x.size() - 1;
  const double sq = (x.tail(d) - y.tail(d)).squaredNorm();
  return 10.0 / std::log(10.0) * std::sqrt(2.0 * sq);
}

struct DtwResult {
  std::vector<std::pair<Index, Index>> path;
  double cost = 0.0;
};

/// Minimum-cost monotone alignment with steps (1,0), (0,1), (1,1) and
/// frame_distance as the local cost.
DtwResult dtw_align(const McepSequence& x, const McepSequence& y);

/// Mean frame_distance along the DTW path, in dB.
double mcd(const McepSequence& x, const McepSequence& y);

/// Per frame, orthonormal DCT-II of the log-mel column, keeping
/// coefficients 0..order.
McepSequence mel_to_mcep(const MelSpectrogram& m, int order = kDefaultMcdOrder);

/// Orthonormal DCT-II matrix (rows = coefficients).
Eigen::MatrixXd dct2_matrix(Index n);

}  // namespace melaug::metrics
