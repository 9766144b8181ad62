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

#include "melaug/signal/wav.hpp"

#include <algorithm>
#include <cmath>

#include "../detail/le.hpp"
#include "melaug/error.hpp"
#include "melaug/io.hpp"

namespace melaug::signal {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

}  // namespace

Waveform decode_wav(std::span<const std::uint8_t> bytes) {
  detail::LeReader r(bytes, "wav");
  if (r.remaining() < 12 || r.tag(4) != "RIFF") throw FormatError("wav: missing RIFF header");
  r.u32();  // riff size; not trusted, chunks are bounds-checked instead
  if (r.tag(4) != "WAVE") throw FormatError("wav: missing WAVE tag");

  bool have_fmt = false;
  std::uint16_t channels = 0;
  std::uint32_t rate = 0;
  std::span<const std::uint8_t> data;
  bool have_data = false;

  while (r.remaining() >= 8 && !have_data) {
    const std::string id = r.tag(4);
    const std::uint32_t size = r.u32();
    if (size > r.remaining()) throw FormatError("wav: chunk '" + id + "' overruns file");
    if (id == "fmt ") {
      if (size < 16) throw FormatError("wav: fmt chunk too small");
      auto body = r.take(size);
      detail::LeReader f(body, "wav fmt");
      std::uint16_t format = f.u16();
      channels = f.u16();
      rate = f.u32();
      f.u32();  // byte rate
      f.u16();  // block align
      const std::uint16_t bits = f.u16();
      if (format == kFormatExtensible) {
        if (size < 40) throw FormatError("wav: truncated extensible fmt chunk");
        f.u16();  // cb size
        f.u16();  // valid bits
        f.u32();  // channel mask
        format = f.u16();  // first two bytes of the subformat GUID
      }
      if (format != kFormatPcm) throw UnsupportedFormat("wav: only PCM encoding is supported");
      if (bits != 16) throw UnsupportedFormat("wav: only 16-bit samples are supported");
      if (channels == 0) throw FormatError("wav: zero channels");
      if (rate == 0) throw FormatError("wav: zero sample rate");
      have_fmt = true;
    } else if (id == "data") {
      data = r.take(size);
      have_data = true;
    } else {
      r.skip(size);
    }
    if ((size & 1u) && r.remaining() > 0 && !have_data) r.skip(1);
  }
  if (!have_fmt) throw FormatError("wav: missing fmt chunk");
  if (!have_data) throw FormatError("wav: missing data chunk");

  const std::size_t frame_bytes = 2u * channels;
  const auto frames = static_cast<Index>(data.size() / frame_bytes);
  Waveform w;
  w.sample_rate = static_cast<int>(rate);
  w.samples.resize(frames);
  for (Index i = 0; i < frames; ++i) {
    double acc = 0.0;
    for (std::uint16_t c = 0; c < channels; ++c) {
      const std::size_t at = static_cast<std::size_t>(i) * frame_bytes + 2u * c;
      const auto raw = static_cast<std::int16_t>(data[at] | (data[at + 1] << 8));
      acc += raw / 32768.0;
    }
    w.samples[i] = acc / channels;
  }
  return w;
}

Waveform load_wav(const std::filesystem::path& path) {
  const auto bytes = read_file_bytes(path);
  try {
    return decode_wav(bytes);
  } catch (const FormatError& e) {
    if (dynamic_cast<const UnsupportedFormat*>(&e))
      throw UnsupportedFormat(path.string() + ": " + e.what());
    throw FormatError(path.string() + ": " + e.what());
  }
}

std::vector<std::uint8_t> encode_wav(const Waveform& w) {
  if (w.sample_rate <= 0) throw UsageError("wav: sample rate must be positive");
  if (!w.samples.allFinite()) throw UsageError("wav: samples must be finite");
  const auto n = static_cast<std::uint32_t>(w.samples.size());
  detail::LeWriter out;
  out.bytes("RIFF");
  out.u32(36 + 2 * n);
  out.bytes("WAVE");
  out.bytes("fmt ");
  out.u32(16);
  out.u16(kFormatPcm);
  out.u16(1);
  out.u32(static_cast<std::uint32_t>(w.sample_rate));
  out.u32(static_cast<std::uint32_t>(w.sample_rate) * 2);
  out.u16(2);
  out.u16(16);
  out.bytes("data");
  out.u32(2 * n);
  for (Index i = 0; i < w.samples.size(); ++i) {
    const double q = std::clamp(std::round(w.samples[i] * 32768.0), -32768.0, 32767.0);
    out.i16(static_cast<std::int16_t>(q));
  }
  return out.take();
}

void write_wav(const Waveform& w, const std::filesystem::path& path) {
  write_file_atomic(path, encode_wav(w));
}

}  // namespace melaug::signal
