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

#include "melaug/metrics/text.hpp"

#include <algorithm>
#include <vector>

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "melaug/error.hpp"

namespace melaug::metrics {
namespace {

template <typename Seq>
std::size_t levenshtein(const Seq& a, const Seq& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::vector<std::u32string> words(std::string_view text) {
  std::vector<std::u32string> out;
  std::u32string cur;
  for (char32_t c : to_code_points(text)) {
    if (c == U' ') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace

std::u32string to_code_points(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
  while (i < s.size()) {
    const unsigned char c = byte(i);
    int extra;
    char32_t cp;
    if (c < 0x80) {
      extra = 0;
      cp = c;
    } else if ((c & 0xE0) == 0xC0) {
      extra = 1;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      extra = 3;
      cp = c & 0x07;
    } else {
      throw FormatError("invalid UTF-8 lead byte");
    }
    for (int k = 1; k <= extra; ++k) {
      if (i + k >= s.size() || (byte(i + k) & 0xC0) != 0x80)
        throw FormatError("invalid UTF-8 continuation byte");
      cp = (cp << 6) | (byte(i + k) & 0x3F);
    }
    static constexpr char32_t kMinForLength[] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLength[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
      throw FormatError("invalid UTF-8 code point");
    out.push_back(cp);
    i += static_cast<std::size_t>(extra) + 1;
  }
  return out;
}

std::string normalize_text(std::string_view utf8) {
  to_code_points(utf8);  // validates
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
  const auto src = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<std::int32_t>(utf8.size())));
  const icu::UnicodeString norm = nfc->normalize(src, status);
  if (U_FAILURE(status)) throw Error("NFC normalization failed");

  icu::UnicodeString collapsed;
  bool pending_space = false;
  for (std::int32_t i = 0; i < norm.length();) {
    const UChar32 c = norm.char32At(i);
    i += U16_LENGTH(c);
    if (u_isUWhiteSpace(c)) {
      pending_space = !collapsed.isEmpty();
      continue;
    }
    if (pending_space) collapsed.append(static_cast<UChar>(u' '));
    pending_space = false;
    collapsed.append(c);
  }
  std::string out;
  collapsed.toUTF8String(out);
  return out;
}

std::size_t edit_distance(std::u32string_view a, std::u32string_view b) {
  return levenshtein(a, b);
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
  return levenshtein(to_code_points(a), to_code_points(b));
}

double cer(const Transcript& hyp, const Transcript& ref) {
  const auto r = to_code_points(ref.text);
  if (r.empty()) throw UndefinedReference("cer: empty reference for '" + ref.utterance_id + "'");
  return static_cast<double>(edit_distance(to_code_points(hyp.text), r)) /
         static_cast<double>(r.size());
}

double wer(const Transcript& hyp, const Transcript& ref) {
  const auto r = words(ref.text);
  if (r.empty()) throw UndefinedReference("wer: empty reference for '" + ref.utterance_id + "'");
  return static_cast<double>(levenshtein(words(hyp.text), r)) / static_cast<double>(r.size());
}

}  // namespace melaug::metrics
