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

#include "melaug/metrics/mcd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "melaug/error.hpp"

namespace melaug::metrics {
namespace {

void check_pair(const McepSequence& x, const McepSequence& y) {
  if (x.size() == 0 || y.size() == 0) throw UsageError("dtw: empty sequence");
  if (x.dim() != y.dim())
    throw DimensionMismatch("dtw: dimension " + std::to_string(x.dim()) + " vs " +
                            std::to_string(y.dim()));
  if (x.dim() < 2) throw UsageError("dtw: need at least 2 coefficients per frame");
}

}  // namespace

DtwResult dtw_align(const McepSequence& x, const McepSequence& y) {
  check_pair(x, y);
  const Index n = x.size();
  const Index m = y.size();
  constexpr double inf = std::numeric_limits<double>::infinity();
  Eigen::MatrixXd acc = Eigen::MatrixXd::Constant(n, m, inf);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < m; ++j) {
      const double local = frame_distance(x.frames.col(i), y.frames.col(j));
      double best = (i == 0 && j == 0) ? 0.0 : inf;
      if (i > 0 && j > 0) best = std::min(best, acc(i - 1, j - 1));
      if (i > 0) best = std::min(best, acc(i - 1, j));
      if (j > 0) best = std::min(best, acc(i, j - 1));
      acc(i, j) = best + local;
    }
  }

  DtwResult out;
  out.cost = acc(n - 1, m - 1);
  Index i = n - 1;
  Index j = m - 1;
  out.path.emplace_back(i, j);
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && acc(i - 1, j - 1) <= acc(i - 1, j) && acc(i - 1, j - 1) <= acc(i, j - 1)) {
      --i;
      --j;
    } else if (j == 0 || (i > 0 && acc(i - 1, j) <= acc(i, j - 1))) {
      --i;
    } else {
      --j;
    }
    out.path.emplace_back(i, j);
  }
  std::reverse(out.path.begin(), out.path.end());
  return out;
}

double mcd(const McepSequence& x, const McepSequence& y) {
  const DtwResult r = dtw_align(x, y);
  return r.cost / static_cast<double>(r.path.size());
}

Eigen::MatrixXd dct2_matrix(Index n) {
  Eigen::MatrixXd c(n, n);
  const double nn = static_cast<double>(n);
  for (Index k = 0; k < n; ++k) {
    const double scale = std::sqrt((k == 0 ? 1.0 : 2.0) / nn);
    for (Index i = 0; i < n; ++i)
      c(k, i) = scale * std::cos(std::numbers::pi * (static_cast<double>(i) + 0.5) *
                                 static_cast<double>(k) / nn);
  }
  return c;
}

McepSequence mel_to_mcep(const MelSpectrogram& m, int order) {
  if (order < 1) throw ParamOutOfRange("mel_to_mcep: order must be >= 1");
  if (order >= m.nu())
    throw ParamOutOfRange("mel_to_mcep: order " + std::to_string(order) +
                          " must be below the bin count " + std::to_string(m.nu()));
  const Eigen::MatrixXd dct = dct2_matrix(m.nu());
  return {dct.topRows(order + 1) * m.values.cast<double>()};
}

}  // namespace melaug::metrics
