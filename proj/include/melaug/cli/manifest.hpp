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
#include <string>
#include <string_view>
#include <vector>

namespace melaug::cli {

/// One utterance of a search manifest.
struct ManifestEntry {
  std::string utt_id;
  std::filesystem::path audio_path;
  std::string transcript;
};

/// UTF-8 TSV `utt_id<TAB>audio_path<TAB>transcript`, no header; blank lines
/// and lines starting with '#' are skipped. Relative audio paths resolve
/// against `base_dir`.
std::vector<ManifestEntry> parse_manifest(std::string_view text, const std::string& source,
                                          const std::filesystem::path& base_dir);
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);

}  // namespace melaug::cli
