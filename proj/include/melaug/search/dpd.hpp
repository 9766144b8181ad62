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

#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "melaug/augment/params.hpp"

namespace melaug::search {

using augment::PolicyKind;
using augment::PolicyParams;

/// Dataset figures that normalize D_p: mean frame count E(tau) and bin
/// count nu.
struct DatasetStats {
  double mean_tau = 0.0;
  int nu = 0;
  std::size_t utterance_count = 0;

  void validate() const;
};

/// Maximum deformation ratio of a parameter set:
///   TimeMask  T*Nt / E(tau)     FreqMask  F*Nf / nu
///   TimeWarp  W                 FreqWarp  H / nu
///   TimeLen   L                 Loudness  Lambda
double deformation_ratio(const PolicyParams& p, const DatasetStats& stats);

/// Deformation per unit of CER deterioration. `infinite` is set (and
/// `value` is +inf) when E_p == E_o.
struct DpdValue {
  double value = 0.0;
  bool infinite = false;
};

DpdValue dpd(double d_p, double e_p, double e_o);

/// Masking searches run in two stages; every other policy has one.
enum class Stage { Single, Pairs };

struct DpdRecord {
  PolicyKind policy = PolicyKind::TimeMask;
  Stage stage = Stage::Single;
  PolicyParams param;
  double d_p = 0.0;
  double e_p = 0.0;
  double e_o = 0.0;
  DpdValue dpd;
  bool selected = false;
  std::size_t trials = 0;
};

/// Strict ranking used for selection: infinite DPD above every finite value,
/// then larger DPD, then larger D_p, then the canonical parameter text.
bool ranks_above(const DpdRecord& a, const DpdRecord& b);

/// Index of the best record; records must be non-empty.
std::size_t best_index(std::span<const DpdRecord> records);

/// All (width, count) pairs with width * count == product, ascending width.
std::vector<std::pair<int, int>> divisor_pairs(int product);

}  // namespace melaug::search
