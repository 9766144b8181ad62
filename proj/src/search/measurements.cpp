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

#include "melaug/search/measurements.hpp"

#include <charconv>
#include <cmath>

#include <fmt/format.h>

#include "melaug/error.hpp"
#include "melaug/io.hpp"

namespace melaug::search {
namespace {

constexpr std::string_view kHeader = "policy\tparam_index\tparam_repr\tutt_id\trepeat\tcer";

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

template <typename T>
T parse_field(std::string_view text, const std::string& source, std::size_t line,
              std::string_view name) {
  T v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw ParseError(source, line, fmt::format("invalid {} '{}'", name, text));
  return v;
}

}  // namespace

std::vector<Measurement> parse_measurements(std::string_view text, const std::string& source) {
  std::vector<Measurement> rows;
  std::size_t line_no = 0;
  bool saw_header = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != kHeader)
        throw ParseError(source, line_no, fmt::format("expected header '{}'", kHeader));
      saw_header = true;
      continue;
    }
    const auto f = split_tabs(line);
    if (f.size() != 6)
      throw ParseError(source, line_no, fmt::format("expected 6 columns, got {}", f.size()));
    Measurement m;
    m.policy = std::string(f[0]);
    m.param_index = parse_field<int>(f[1], source, line_no, "param_index");
    m.param_repr = std::string(f[2]);
    m.utt_id = std::string(f[3]);
    m.repeat = parse_field<int>(f[4], source, line_no, "repeat");
    m.cer = parse_field<double>(f[5], source, line_no, "cer");
    m.line = line_no;
    if (m.policy.empty() || m.utt_id.empty() || m.param_repr.empty())
      throw ParseError(source, line_no, "empty policy, param_repr or utt_id");
    if (m.param_index < 0 || m.repeat < 0)
      throw ParseError(source, line_no, "negative param_index or repeat");
    if (!std::isfinite(m.cer) || m.cer < 0.0)
      throw ParseError(source, line_no, "cer must be finite and non-negative");
    rows.push_back(std::move(m));
  }
  if (!saw_header) throw ParseError(source, line_no, "missing header row");
  if (rows.empty()) throw ParseError(source, line_no, "no measurements");
  return rows;
}

std::vector<Measurement> read_measurements(const std::filesystem::path& path) {
  return parse_measurements(read_file_text(path), path.string());
}

std::string format_measurements(std::span<const Measurement> rows) {
  std::string out(kHeader);
  out += '\n';
  for (const auto& m : rows)
    out += fmt::format("{}\t{}\t{}\t{}\t{}\t{}\n", m.policy, m.param_index, m.param_repr,
                       m.utt_id, m.repeat, m.cer);
  return out;
}

void write_measurements(const std::filesystem::path& path, std::span<const Measurement> rows) {
  write_file_atomic(path, format_measurements(rows));
}

}  // namespace melaug::search
