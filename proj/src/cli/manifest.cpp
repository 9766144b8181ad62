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

#include "melaug/cli/manifest.hpp"

#include <set>

#include "melaug/error.hpp"
#include "melaug/io.hpp"
#include "melaug/metrics/text.hpp"

namespace melaug::cli {

std::vector<ManifestEntry> parse_manifest(std::string_view text, const std::string& source,
                                          const std::filesystem::path& base_dir) {
  std::vector<ManifestEntry> out;
  std::set<std::string> ids;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos)
      throw ParseError(source, line_no, "expected utt_id<TAB>audio_path<TAB>transcript");
    ManifestEntry e;
    e.utt_id = std::string(line.substr(0, t1));
    std::filesystem::path audio(std::string(line.substr(t1 + 1, t2 - t1 - 1)));
    e.audio_path = audio.is_absolute() ? audio : base_dir / audio;
    try {
      e.transcript = metrics::normalize_text(line.substr(t2 + 1));
    } catch (const FormatError& err) {
      throw ParseError(source, line_no, err.what());
    }
    if (e.utt_id.empty()) throw ParseError(source, line_no, "empty utt_id");
    if (audio.empty()) throw ParseError(source, line_no, "empty audio path");
    if (e.transcript.empty()) throw ParseError(source, line_no, "empty transcript");
    if (!ids.insert(e.utt_id).second)
      throw ParseError(source, line_no, "duplicate utt_id '" + e.utt_id + "'");
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  return parse_manifest(read_file_text(path), path.string(), path.parent_path());
}

}  // namespace melaug::cli
