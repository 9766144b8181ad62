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

#include <algorithm>
#include <cmath>

#include <Eigen/Core>

namespace melaug::augment {

using Index = Eigen::Index;

/// Output index -> source position for a two-segment warp of an axis of
/// `length` samples: [0, from] is stretched onto [0, to] and
/// [from, length-1] onto [to, length-1]. Requires 0 < to < length-1 and
/// 0 < from < length-1.
struct TwoSegmentMap {
  Index length;
  double from;
  double to;

  double operator()(Index j) const {
    const double x = static_cast<double>(j);
    const double last = static_cast<double>(length - 1);
    if (x <= to) return x * from / to;
    return from + (x - to) * (last - from) / (last - to);
  }
};

/// Output index -> source position for stretching `in_length` samples onto
/// `out_length` samples with both endpoints aligned.
struct UniformMap {
  Index in_length;
  Index out_length;

  double operator()(Index j) const {
    return static_cast<double>(j) * static_cast<double>(in_length - 1) /
           static_cast<double>(out_length - 1);
  }
};

namespace detail {

struct Tap {
  Index i0;
  double frac;
};

inline Tap tap_at(double pos, Index n) {
  pos = std::clamp(pos, 0.0, static_cast<double>(n - 1));
  const auto i0 = static_cast<Index>(std::floor(pos));
  if (i0 >= n - 1) return {n - 1, 0.0};
  return {i0, pos - static_cast<double>(i0)};
}

}  // namespace detail

/// Linear interpolation along columns: output column j is the input sampled
/// at fractional column `src_of(j)`. Interpolation runs in double and the
/// result is rounded once to the scalar type, so every output lies between
/// its two neighbouring inputs.
template <typename Derived, typename Map>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> resample_cols(
    const Eigen::DenseBase<Derived>& in, Index out_cols, const Map& src_of) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(in.rows(), out_cols);
  for (Index j = 0; j < out_cols; ++j) {
    const auto [i0, frac] = detail::tap_at(src_of(j), in.cols());
    if (frac == 0.0) {
      out.col(j) = in.col(i0);
    } else {
      const auto a = in.col(i0).template cast<double>();
      const auto b = in.col(i0 + 1).template cast<double>();
      out.col(j) = (a + frac * (b - a)).template cast<Scalar>();
    }
  }
  return out;
}

/// Row-axis counterpart of resample_cols.
template <typename Derived, typename Map>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> resample_rows(
    const Eigen::DenseBase<Derived>& in, Index out_rows, const Map& src_of) {
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(out_rows, in.cols());
  for (Index j = 0; j < out_rows; ++j) {
    const auto [i0, frac] = detail::tap_at(src_of(j), in.rows());
    if (frac == 0.0) {
      out.row(j) = in.row(i0);
    } else {
      const auto a = in.row(i0).template cast<double>();
      const auto b = in.row(i0 + 1).template cast<double>();
      out.row(j) = (a + frac * (b - a)).template cast<Scalar>();
    }
  }
  return out;
}

/// (x - floor) * scale + floor, evaluated in double and rounded once.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> contract_toward(
    const Eigen::DenseBase<Derived>& in, double floor, double scale) {
  using Scalar = typename Derived::Scalar;
  return ((in.derived().template cast<double>().array() - floor) * scale + floor)
      .template cast<Scalar>();
}

}  // namespace melaug::augment
