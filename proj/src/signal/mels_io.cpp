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

#include "melaug/signal/mels_io.hpp"

#include <cmath>

#include "../detail/le.hpp"
#include "melaug/error.hpp"
#include "melaug/io.hpp"

namespace melaug::signal {

std::vector<std::uint8_t> encode_mels(const MelSpectrogram& m) {
  if (m.nu() < 1 || m.tau() < 1) throw UsageError("mels: empty spectrogram");
  detail::LeWriter out;
  out.buffer().reserve(48 + 4 * static_cast<std::size_t>(m.values.size()));
  out.bytes("MELS");
  out.u8(kMelsVersion);
  out.u32(static_cast<std::uint32_t>(m.nu()));
  out.u64(static_cast<std::uint64_t>(m.tau()));
  out.f64(m.meta.sample_rate);
  out.u32(m.meta.n_fft);
  out.u32(m.meta.hop);
  out.f64(m.meta.fmin);
  out.f64(m.meta.fmax);
  out.f64(m.meta.log_floor);
  // Column-major storage is already frame-major.
  for (Index i = 0; i < m.values.size(); ++i) out.f32(m.values.data()[i]);
  return out.take();
}

MelSpectrogram decode_mels(std::span<const std::uint8_t> bytes) {
  detail::LeReader r(bytes, "mels");
  if (r.remaining() < 4 || r.tag(4) != "MELS") throw FormatError("mels: bad magic");
  const auto version = r.u8();
  if (version != kMelsVersion)
    throw UnsupportedFormat("mels: unsupported version " + std::to_string(version));
  const std::uint32_t nu = r.u32();
  const std::uint64_t tau = r.u64();
  if (nu == 0 || tau == 0) throw FormatError("mels: zero dimension");
  MelSpectrogram m;
  m.meta.sample_rate = r.f64();
  m.meta.n_fft = r.u32();
  m.meta.hop = r.u32();
  m.meta.fmin = r.f64();
  m.meta.fmax = r.f64();
  m.meta.log_floor = r.f64();
  if (tau > r.remaining() / 4 / nu) throw FormatError("mels: truncated payload");
  const std::uint64_t count = std::uint64_t{nu} * tau;
  if (r.remaining() != count * 4) throw FormatError("mels: payload size mismatch");
  m.values.resize(static_cast<Index>(nu), static_cast<Index>(tau));
  for (std::uint64_t i = 0; i < count; ++i) {
    const float v = r.f32();
    if (!std::isfinite(v)) throw FormatError("mels: non-finite value");
    m.values.data()[i] = v;
  }
  return m;
}

void write_mels(const MelSpectrogram& m, const std::filesystem::path& path) {
  write_file_atomic(path, encode_mels(m));
}

MelSpectrogram read_mels(const std::filesystem::path& path) {
  const auto bytes = read_file_bytes(path);
  try {
    return decode_mels(bytes);
  } catch (const UnsupportedFormat& e) {
    throw UnsupportedFormat(path.string() + ": " + e.what());
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace melaug::signal
