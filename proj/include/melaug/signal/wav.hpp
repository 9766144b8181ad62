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

/// Reads a RIFF/WAVE 16-bit PCM file. Multichannel input is averaged to mono
/// and samples are scaled by 1/32768.
Waveform load_wav(const std::filesystem::path& path);
Waveform decode_wav(std::span<const std::uint8_t> bytes);

/// Writes 16-bit PCM mono. Samples are rounded to the nearest step and
/// clamped to [-32768, 32767].
void write_wav(const Waveform& w, const std::filesystem::path& path);
std::vector<std::uint8_t> encode_wav(const Waveform& w);

}  // namespace melaug::signal
