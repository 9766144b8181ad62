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
#include <filesystem>
#include <span>
#include <vector>

#include "melaug/types.hpp"

namespace melaug::signal {

/// "MELS" container, little-endian:
///   "MELS" | u8 version=1 | u32 nu | u64 tau |
///   f64 sample_rate | u32 n_fft | u32 hop | f64 fmin | f64 fmax | f64 log_floor |
///   nu*tau f32 values, frame-major.
inline constexpr std::uint8_t kMelsVersion = 1;

std::vector<std::uint8_t> encode_mels(const MelSpectrogram& m);
MelSpectrogram decode_mels(std::span<const std::uint8_t> bytes);

void write_mels(const MelSpectrogram& m, const std::filesystem::path& path);
MelSpectrogram read_mels(const std::filesystem::path& path);

}  // namespace melaug::signal
