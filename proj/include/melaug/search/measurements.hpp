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

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace melaug::search {

/// Policy column value for rows measured without augmentation (E_o).
inline constexpr std::string_view kBaselinePolicy = "baseline";

/// One per-trial CER. TSV columns:
///   policy  param_index  param_repr  utt_id  repeat  cer
struct Measurement {
  std::string policy;
  int param_index = 0;
  std::string param_repr;
  std::string utt_id;
  int repeat = 0;
  double cer = 0.0;
  std::size_t line = 0;  // source line when parsed, 0 otherwise
};

std::vector<Measurement> parse_measurements(std::string_view text, const std::string& source);
std::vector<Measurement> read_measurements(const std::filesystem::path& path);

/// Header plus one row per measurement; CER printed with the shortest text
/// that parses back to the same double.
std::string format_measurements(std::span<const Measurement> rows);
void write_measurements(const std::filesystem::path& path, std::span<const Measurement> rows);

}  // namespace melaug::search
