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

#include <cstddef>
#include <string>
#include <string_view>

namespace melaug::metrics {

/// NFC normalization, whitespace runs collapsed to one ASCII space, ends
/// trimmed. No case folding. Idempotent.
std::string normalize_text(std::string_view utf8);

/// Decodes UTF-8 into Unicode scalar values. Throws FormatError on invalid
/// input.
std::u32string to_code_points(std::string_view utf8);

struct Transcript {
  std::string utterance_id;
  std::string text;  // normalized

  static Transcript make(std::string utterance_id, std::string_view raw) {
    return {std::move(utterance_id), normalize_text(raw)};
  }
};

/// Levenshtein distance with unit costs over code points.
std::size_t edit_distance(std::u32string_view a, std::u32string_view b);
std::size_t edit_distance(std::string_view a_utf8, std::string_view b_utf8);

/// edit_distance(hyp, ref) / len(ref), spaces included. Not clamped; can
/// exceed 1 for long hypotheses. Throws UndefinedReference for an empty ref.
double cer(const Transcript& hyp, const Transcript& ref);

/// Word-level variant over whitespace-separated tokens.
double wer(const Transcript& hyp, const Transcript& ref);

}  // namespace melaug::metrics
