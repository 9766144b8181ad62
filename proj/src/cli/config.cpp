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

#include "melaug/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <functional>

#include <fmt/format.h>

#include "melaug/error.hpp"
#include "melaug/io.hpp"

namespace melaug::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

struct Line {
  const std::string& source;
  std::size_t no;
  std::string_view key;
  std::string_view value;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(source, no, what); }

  double real() const {
    double v = 0.0;
    const auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || p != value.data() + value.size() || value.empty() || !std::isfinite(v))
      fail(fmt::format("{}: expected a number, got '{}'", key, value));
    return v;
  }
  long long integer() const {
    long long v = 0;
    const auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || p != value.data() + value.size() || value.empty())
      fail(fmt::format("{}: expected an integer, got '{}'", key, value));
    return v;
  }
  int small_int() const {
    const long long v = integer();
    if (v < -1000000000 || v > 1000000000) fail(fmt::format("{}: value out of range", key));
    return static_cast<int>(v);
  }
  std::uint64_t u64() const {
    std::uint64_t v = 0;
    const auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || p != value.data() + value.size() || value.empty())
      fail(fmt::format("{}: expected an unsigned integer, got '{}'", key, value));
    return v;
  }
  std::string text() const { return std::string(value); }
};

void apply_schedule_key(ToolConfig& cfg, const Line& line) {
  // schedule.<tag>.<field>
  const auto rest = line.key.substr(std::string_view("schedule.").size());
  const auto dot = rest.find('.');
  if (dot == std::string_view::npos) line.fail(fmt::format("unknown key '{}'", line.key));
  const auto kind = augment::parse_tag(rest.substr(0, dot));
  if (!kind) line.fail(fmt::format("unknown policy in key '{}'", line.key));
  auto& s = cfg.schedules[*kind];
  const auto field = rest.substr(dot + 1);
  if (field == "kind") {
    if (line.value == "arithmetic") s.kind = search::ScheduleKind::Arithmetic;
    else if (line.value == "geometric") s.kind = search::ScheduleKind::Geometric;
    else line.fail("schedule kind must be arithmetic or geometric");
  } else if (field == "start") {
    s.start = line.real();
  } else if (field == "step" || field == "ratio") {
    s.step_or_ratio = line.real();
  } else if (field == "count") {
    s.count = line.small_int();
  } else {
    line.fail(fmt::format("unknown key '{}'", line.key));
  }
}

}  // namespace

ToolConfig::ToolConfig() {
  for (auto k : augment::kAllPolicies) schedules[k] = search::default_schedule(k);
}

ToolConfig parse_config(std::string_view text, const std::string& source) {
  ToolConfig cfg;
  using Setter = std::function<void(ToolConfig&, const Line&)>;
  const std::map<std::string_view, Setter> setters = {
      {"mel.sample_rate", [](ToolConfig& c, const Line& l) { c.mel.sample_rate = l.small_int(); }},
      {"mel.n_fft", [](ToolConfig& c, const Line& l) { c.mel.n_fft = l.small_int(); }},
      {"mel.hop", [](ToolConfig& c, const Line& l) { c.mel.hop = l.small_int(); }},
      {"mel.n_mels", [](ToolConfig& c, const Line& l) { c.mel.n_mels = l.small_int(); }},
      {"mel.fmin", [](ToolConfig& c, const Line& l) { c.mel.fmin = l.real(); }},
      {"mel.fmax", [](ToolConfig& c, const Line& l) { c.mel.fmax = l.real(); }},
      {"mel.log_floor", [](ToolConfig& c, const Line& l) { c.mel.log_floor = l.real(); }},
      {"griffin_lim.iterations",
       [](ToolConfig& c, const Line& l) { c.griffin_lim_iterations = l.small_int(); }},
      {"search.repeats", [](ToolConfig& c, const Line& l) { c.repeats = l.small_int(); }},
      {"search.seed", [](ToolConfig& c, const Line& l) { c.seed = l.u64(); }},
      {"search.workers", [](ToolConfig& c, const Line& l) { c.workers = l.small_int(); }},
      {"transcriber.backend",
       [](ToolConfig& c, const Line& l) {
         if (l.value == "remote") c.transcriber.backend = asr::TranscriberConfig::Backend::Remote;
         else if (l.value == "fixture")
           c.transcriber.backend = asr::TranscriberConfig::Backend::Fixture;
         else l.fail("transcriber.backend must be remote or fixture");
         c.transcriber_configured = true;
       }},
      {"transcriber.endpoint", [](ToolConfig& c, const Line& l) { c.transcriber.endpoint = l.text(); }},
      {"transcriber.fixture_dir",
       [](ToolConfig& c, const Line& l) { c.transcriber.fixture_dir = l.text(); }},
      {"transcriber.timeout",
       [](ToolConfig& c, const Line& l) { c.transcriber.timeout_seconds = l.real(); }},
      {"transcriber.retries", [](ToolConfig& c, const Line& l) { c.transcriber.retries = l.small_int(); }},
      {"transcriber.language",
       [](ToolConfig& c, const Line& l) { c.transcriber.language_hint = l.text(); }},
      {"transcriber.max_in_flight",
       [](ToolConfig& c, const Line& l) { c.transcriber.max_in_flight = l.small_int(); }},
      {"metrics.mcd_order", [](ToolConfig& c, const Line& l) { c.mcd_order = l.small_int(); }},
      {"stats.mean_tau", [](ToolConfig& c, const Line& l) { c.stats_mean_tau = l.real(); }},
      {"stats.nu", [](ToolConfig& c, const Line& l) { c.stats_nu = l.small_int(); }},
      {"report.dp_decimals", [](ToolConfig& c, const Line& l) { c.dp_decimals = l.small_int(); }},
  };

  std::size_t no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++no;
    const auto line = trim(raw.ends_with('\r') ? raw.substr(0, raw.size() - 1) : raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(source, no, "expected 'key = value'");
    const Line l{source, no, trim(line.substr(0, eq)), trim(line.substr(eq + 1))};
    if (l.key.starts_with("schedule.")) {
      apply_schedule_key(cfg, l);
      continue;
    }
    const auto it = setters.find(l.key);
    if (it == setters.end()) l.fail(fmt::format("unknown key '{}'", l.key));
    it->second(cfg, l);
  }

  try {
    cfg.mel.validate();
    for (const auto& [kind, s] : cfg.schedules) s.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(source + ": " + e.what());
  }
  if (cfg.griffin_lim_iterations < 1) throw ConfigError(source + ": griffin_lim.iterations must be >= 1");
  if (cfg.repeats < 1) throw ConfigError(source + ": search.repeats must be >= 1");
  if (cfg.workers < 1) throw ConfigError(source + ": search.workers must be >= 1");
  if (cfg.mcd_order < 1) throw ConfigError(source + ": metrics.mcd_order must be >= 1");
  if (cfg.dp_decimals && (*cfg.dp_decimals < 0 || *cfg.dp_decimals > 12))
    throw ConfigError(source + ": report.dp_decimals must be in [0, 12]");
  return cfg;
}

ToolConfig load_config(const std::filesystem::path& path) {
  ToolConfig cfg = parse_config(read_file_text(path), path.string());
  auto& dir = cfg.transcriber.fixture_dir;
  if (!dir.empty() && dir.is_relative()) dir = path.parent_path() / dir;
  return cfg;
}

}  // namespace melaug::cli
