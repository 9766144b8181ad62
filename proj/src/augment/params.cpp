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

#include "melaug/augment/params.hpp"

#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <map>
#include <vector>

#include "melaug/error.hpp"

namespace melaug::augment {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

double parse_number(std::string_view key, std::string_view text) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty() || !std::isfinite(v))
    throw UsageError(fmt::format("invalid number for {}: '{}'", key, text));
  return v;
}

int parse_integer(std::string_view key, std::string_view text) {
  const double v = parse_number(key, text);
  if (v != std::floor(v) || std::abs(v) > 1e9)
    throw UsageError(fmt::format("{} must be an integer, got '{}'", key, text));
  return static_cast<int>(v);
}

/// Splits "A=1,B=2" into a key map; a bare value maps to the empty key.
std::map<std::string, std::string> split_fields(std::string_view text) {
  std::map<std::string, std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                         : comma - start);
    const auto eq = part.find('=');
    std::string key = eq == std::string_view::npos ? std::string{} : trim(part.substr(0, eq));
    std::string val = trim(eq == std::string_view::npos ? part : part.substr(eq + 1));
    if (!out.emplace(std::move(key), std::move(val)).second)
      throw UsageError(fmt::format("duplicate field in '{}'", text));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string take(std::map<std::string, std::string>& fields,
                 std::initializer_list<std::string_view> names, std::string_view text) {
  for (auto name : names) {
    auto it = fields.find(std::string(name));
    if (it != fields.end()) {
      auto v = std::move(it->second);
      fields.erase(it);
      return v;
    }
  }
  throw UsageError(fmt::format("missing {} in '{}'", *names.begin(), text));
}

}  // namespace

PolicyKind kind_of(const PolicyParams& p) {
  return std::visit(Overloaded{[](const TimeWarp&) { return PolicyKind::TimeWarp; },
                               [](const FreqMask&) { return PolicyKind::FreqMask; },
                               [](const TimeMask&) { return PolicyKind::TimeMask; },
                               [](const FreqWarp&) { return PolicyKind::FreqWarp; },
                               [](const LoudnessCtl&) { return PolicyKind::LoudnessCtl; },
                               [](const TimeLenCtl&) { return PolicyKind::TimeLenCtl; }},
                    p);
}

std::string_view tag(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::TimeWarp: return "tw";
    case PolicyKind::FreqMask: return "fm";
    case PolicyKind::TimeMask: return "tm";
    case PolicyKind::FreqWarp: return "fw";
    case PolicyKind::LoudnessCtl: return "lc";
    case PolicyKind::TimeLenCtl: return "tlc";
  }
  return "?";
}

std::optional<PolicyKind> parse_tag(std::string_view t) {
  for (auto k : kAllPolicies)
    if (tag(k) == t) return k;
  return std::nullopt;
}

void validate(const PolicyParams& p) {
  std::visit(
      Overloaded{
          [](const TimeWarp& q) {
            if (!(q.max_fraction >= 0.0 && q.max_fraction < 1.0))
              throw ParamOutOfRange("time warp W must be in [0, 1)");
          },
          [](const FreqMask& q) {
            if (q.max_width < 0) throw ParamOutOfRange("frequency mask F must be >= 0");
            if (q.count < 1) throw ParamOutOfRange("frequency mask Nf must be >= 1");
          },
          [](const TimeMask& q) {
            if (q.max_width < 0) throw ParamOutOfRange("time mask T must be >= 0");
            if (q.count < 1) throw ParamOutOfRange("time mask Nt must be >= 1");
          },
          [](const FreqWarp& q) {
            if (q.max_bins < 0) throw ParamOutOfRange("frequency warp H must be >= 0");
          },
          [](const LoudnessCtl& q) {
            if (!(q.max_lambda >= 0.0 && q.max_lambda <= 1.0))
              throw ParamOutOfRange("loudness control Lambda must be in [0, 1]");
          },
          [](const TimeLenCtl& q) {
            if (!(q.max_fraction >= 0.0 && q.max_fraction < 1.0))
              throw ParamOutOfRange("time length control L must be in [0, 1)");
          }},
      p);
}

std::string format_params(const PolicyParams& p) {
  return std::visit(
      Overloaded{
          [](const TimeWarp& q) { return fmt::format("W={}", q.max_fraction); },
          [](const FreqMask& q) { return fmt::format("F={},Nf={}", q.max_width, q.count); },
          [](const TimeMask& q) { return fmt::format("T={},Nt={}", q.max_width, q.count); },
          [](const FreqWarp& q) { return fmt::format("H={}", q.max_bins); },
          [](const LoudnessCtl& q) { return fmt::format("Lambda={}", q.max_lambda); },
          [](const TimeLenCtl& q) { return fmt::format("L={}", q.max_fraction); }},
      p);
}

PolicyParams parse_params(PolicyKind kind, std::string_view text) {
  auto fields = split_fields(text);
  PolicyParams out;
  switch (kind) {
    case PolicyKind::TimeWarp:
      out = TimeWarp{parse_number("W", take(fields, {"W", ""}, text))};
      break;
    case PolicyKind::FreqWarp:
      out = FreqWarp{parse_integer("H", take(fields, {"H", ""}, text))};
      break;
    case PolicyKind::LoudnessCtl:
      out = LoudnessCtl{parse_number("Lambda", take(fields, {"Lambda", "lambda", ""}, text))};
      break;
    case PolicyKind::TimeLenCtl:
      out = TimeLenCtl{parse_number("L", take(fields, {"L", ""}, text))};
      break;
    case PolicyKind::FreqMask: {
      const int width = parse_integer("F", take(fields, {"F", ""}, text));
      const int count = fields.contains("Nf") ? parse_integer("Nf", take(fields, {"Nf"}, text)) : 1;
      out = FreqMask{width, count};
      break;
    }
    case PolicyKind::TimeMask: {
      const int width = parse_integer("T", take(fields, {"T", ""}, text));
      const int count = fields.contains("Nt") ? parse_integer("Nt", take(fields, {"Nt"}, text)) : 1;
      out = TimeMask{width, count};
      break;
    }
  }
  if (!fields.empty())
    throw UsageError(fmt::format("unexpected field '{}' for policy {}", fields.begin()->first,
                                 tag(kind)));
  return out;
}

PolicyParams zero_params(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::TimeWarp: return TimeWarp{0.0};
    case PolicyKind::FreqMask: return FreqMask{0, 1};
    case PolicyKind::TimeMask: return TimeMask{0, 1};
    case PolicyKind::FreqWarp: return FreqWarp{0};
    case PolicyKind::LoudnessCtl: return LoudnessCtl{0.0};
    case PolicyKind::TimeLenCtl: return TimeLenCtl{0.0};
  }
  return TimeWarp{0.0};
}

}  // namespace melaug::augment
