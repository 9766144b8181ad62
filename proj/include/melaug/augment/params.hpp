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

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace melaug::augment {

enum class PolicyKind { TimeWarp, FreqMask, TimeMask, FreqWarp, LoudnessCtl, TimeLenCtl };

inline constexpr std::array<PolicyKind, 6> kAllPolicies = {
    PolicyKind::TimeMask, PolicyKind::FreqMask,    PolicyKind::TimeWarp,
    PolicyKind::FreqWarp, PolicyKind::TimeLenCtl, PolicyKind::LoudnessCtl};

/// Time warp distance bound, as a fraction of the frame count.
struct TimeWarp {
  double max_fraction = 0.0;
  friend bool operator==(const TimeWarp&, const TimeWarp&) = default;
};

struct FreqMask {
  int max_width = 0;
  int count = 1;
  friend bool operator==(const FreqMask&, const FreqMask&) = default;
};

struct TimeMask {
  int max_width = 0;
  int count = 1;
  friend bool operator==(const TimeMask&, const TimeMask&) = default;
};

/// Frequency warp distance bound, in mel bins.
struct FreqWarp {
  int max_bins = 0;
  friend bool operator==(const FreqWarp&, const FreqWarp&) = default;
};

/// Upper bound of the loudness contraction factor lambda.
struct LoudnessCtl {
  double max_lambda = 0.0;
  friend bool operator==(const LoudnessCtl&, const LoudnessCtl&) = default;
};

/// Length change bound, as a fraction of the frame count.
struct TimeLenCtl {
  double max_fraction = 0.0;
  friend bool operator==(const TimeLenCtl&, const TimeLenCtl&) = default;
};

using PolicyParams =
    std::variant<TimeWarp, FreqMask, TimeMask, FreqWarp, LoudnessCtl, TimeLenCtl>;

PolicyKind kind_of(const PolicyParams& p);

/// Short tags: tw fm tm fw lc tlc.
std::string_view tag(PolicyKind kind);
std::optional<PolicyKind> parse_tag(std::string_view tag);

/// Throws ParamOutOfRange when a value is outside its policy's domain.
void validate(const PolicyParams& p);

/// Canonical text form, e.g. "T=8,Nt=1", "W=0.08", "Lambda=0.16".
std::string format_params(const PolicyParams& p);

/// Accepts the canonical form, or a bare number for the primary parameter
/// (masks then use a count of 1). Throws UsageError on malformed text.
PolicyParams parse_params(PolicyKind kind, std::string_view text);

/// Parameter set whose transform is the identity.
PolicyParams zero_params(PolicyKind kind);

}  // namespace melaug::augment
