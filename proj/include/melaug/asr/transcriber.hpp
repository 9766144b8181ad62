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
#include <map>
#include <memory>
#include <mutex>
#include <semaphore>
#include <string>
#include <string_view>

#include "melaug/metrics/text.hpp"
#include "melaug/types.hpp"

namespace melaug::asr {

struct TranscriberConfig {
  enum class Backend { Remote, Fixture };

  Backend backend = Backend::Fixture;
  std::string endpoint;  // http://host[:port]/path
  std::filesystem::path fixture_dir;
  double timeout_seconds = 30.0;
  int retries = 3;  // total attempts for the remote backend
  std::string language_hint = "ko-KR";
  int max_in_flight = 4;
  double initial_backoff_seconds = 0.5;

  void validate() const;
};

/// Request keys: "<utt>__<policy>__<param_index>__<repeat>" for augmented
/// trials and "<utt>__baseline" for the unaugmented pass.
std::string request_key(std::string_view utt_id, std::string_view policy,
                        std::size_t param_index, std::size_t repeat);
std::string baseline_key(std::string_view utt_id);

/// Speech recognizer used by the DPD search. Implementations must be safe to
/// call from several threads at once.
class Transcriber {
 public:
  virtual ~Transcriber() = default;
  virtual metrics::Transcript transcribe(const Waveform& w, const std::string& key) = 0;
};

/// Returns the contents of `<fixture_dir>/<key>.txt`; the audio is ignored.
class FixtureTranscriber final : public Transcriber {
 public:
  explicit FixtureTranscriber(std::filesystem::path dir);
  metrics::Transcript transcribe(const Waveform& w, const std::string& key) override;

 private:
  std::filesystem::path dir_;
};

/// POSTs the waveform as a 16-bit PCM WAV body (Content-Type: audio/wav,
/// optional X-Language) and reads the "transcript" field of the JSON reply.
/// Transport failures are retried with exponential backoff; a result is
/// cached per key so a key is answered at most once.
class RemoteTranscriber final : public Transcriber {
 public:
  explicit RemoteTranscriber(TranscriberConfig cfg);
  metrics::Transcript transcribe(const Waveform& w, const std::string& key) override;

 private:
  TranscriberConfig cfg_;
  std::string base_;
  std::string path_;
  std::counting_semaphore<1024> in_flight_;
  std::mutex mu_;
  std::map<std::string, metrics::Transcript> answered_;
};

std::unique_ptr<Transcriber> make_transcriber(const TranscriberConfig& cfg);

}  // namespace melaug::asr
