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
#include <random>
#include <string_view>

namespace melaug::augment {

/// Seed for one augmentation draw. Same seed, params and input give a
/// bit-identical output.
struct AugSeed {
  std::uint64_t value = 0;
  friend bool operator==(AugSeed, AugSeed) = default;
};

/// Portable random source: std::mt19937_64 (fully specified by the standard)
/// with hand-written distributions, since the standard distributions are
/// implementation-defined.
///
///   uniform_int(lo, hi):  rejection sampling on the 64-bit output
///   uniform_real(lo, hi): lo + u*(hi-lo), u = (next >> 11) * 2^-53 in [0, 1)
class Rng {
 public:
  explicit Rng(AugSeed seed) : engine_(seed.value) {}

  std::uint64_t next() { return engine_(); }
  double unit();
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  double uniform_real(double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Keyed substream: a pure function of (seed, utterance id, policy tag,
/// parameter index, repeat index).
AugSeed substream(AugSeed seed, std::string_view utt_id, std::string_view policy,
                  std::uint64_t param_index, std::uint64_t repeat);

}  // namespace melaug::augment
