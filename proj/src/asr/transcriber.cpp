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

#include "melaug/asr/transcriber.hpp"

#include <chrono>
#include <cmath>
#include <thread>

#include <httplib.h>
#include <json.hpp>
#include <fmt/format.h>

#include "melaug/error.hpp"
#include "melaug/io.hpp"
#include "melaug/signal/wav.hpp"

namespace melaug::asr {

void TranscriberConfig::validate() const {
  if (backend == Backend::Remote && endpoint.empty())
    throw ConfigError("transcriber: remote backend needs an endpoint");
  if (backend == Backend::Fixture && fixture_dir.empty())
    throw ConfigError("transcriber: fixture backend needs fixture_dir");
  if (!(timeout_seconds > 0.0)) throw ConfigError("transcriber: timeout must be > 0");
  if (retries < 1) throw ConfigError("transcriber: retries must be >= 1");
  if (max_in_flight < 1 || max_in_flight > 1024)
    throw ConfigError("transcriber: max_in_flight must be in [1, 1024]");
  if (initial_backoff_seconds < 0.0) throw ConfigError("transcriber: negative backoff");
}

std::string request_key(std::string_view utt_id, std::string_view policy,
                        std::size_t param_index, std::size_t repeat) {
  return fmt::format("{}__{}__{}__{}", utt_id, policy, param_index, repeat);
}

std::string baseline_key(std::string_view utt_id) { return fmt::format("{}__baseline", utt_id); }

FixtureTranscriber::FixtureTranscriber(std::filesystem::path dir) : dir_(std::move(dir)) {}

metrics::Transcript FixtureTranscriber::transcribe(const Waveform& w, const std::string& key) {
  if (w.size() == 0) throw UsageError("transcribe: empty waveform");
  const auto path = dir_ / (key + ".txt");
  if (!std::filesystem::is_regular_file(path))
    throw FixtureMiss("fixture transcript missing: " + path.string());
  return metrics::Transcript::make(key, read_file_text(path));
}

RemoteTranscriber::RemoteTranscriber(TranscriberConfig cfg)
    : cfg_(std::move(cfg)), in_flight_(cfg_.max_in_flight) {
  cfg_.validate();
  const auto scheme = cfg_.endpoint.find("://");
  if (scheme == std::string::npos) throw ConfigError("transcriber: endpoint needs a scheme");
  const auto slash = cfg_.endpoint.find('/', scheme + 3);
  base_ = cfg_.endpoint.substr(0, slash);
  path_ = slash == std::string::npos ? "/" : cfg_.endpoint.substr(slash);
}

metrics::Transcript RemoteTranscriber::transcribe(const Waveform& w, const std::string& key) {
  if (w.size() == 0) throw UsageError("transcribe: empty waveform");
  {
    std::lock_guard lock(mu_);
    if (auto it = answered_.find(key); it != answered_.end()) return it->second;
  }

  const auto bytes = signal::encode_wav(w);
  const std::string body(bytes.begin(), bytes.end());
  httplib::Headers headers;
  if (!cfg_.language_hint.empty()) headers.emplace("X-Language", cfg_.language_hint);

  const auto timeout = std::chrono::duration<double>(cfg_.timeout_seconds);
  const auto timeout_us = std::chrono::duration_cast<std::chrono::microseconds>(timeout);
  double backoff = cfg_.initial_backoff_seconds;
  std::string last_error;
  for (int attempt = 0; attempt < cfg_.retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(std::chrono::duration<double>(backoff));
      backoff *= 2.0;
    }
    httplib::Result res;
    {
      in_flight_.acquire();
      httplib::Client client(base_);
      client.set_connection_timeout(timeout_us);
      client.set_read_timeout(timeout_us);
      client.set_write_timeout(timeout_us);
      res = client.Post(path_, headers, body, "audio/wav");
      in_flight_.release();
    }
    if (!res) {
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status < 200 || res->status >= 300)
      throw ServiceError(res->status, fmt::format("transcriber: {} answered HTTP {} for {}",
                                                  cfg_.endpoint, res->status, key));
    std::string text;
    try {
      const auto json = nlohmann::json::parse(res->body);
      text = json.at("transcript").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
      throw ServiceError(res->status, fmt::format("transcriber: malformed reply for {}: {}",
                                                  key, e.what()));
    }
    auto transcript = metrics::Transcript::make(key, text);
    std::lock_guard lock(mu_);
    return answered_.emplace(key, std::move(transcript)).first->second;
  }
  throw TransientError(fmt::format("transcriber: {} unreachable after {} attempts for {}: {}",
                                   cfg_.endpoint, cfg_.retries, key, last_error));
}

std::unique_ptr<Transcriber> make_transcriber(const TranscriberConfig& cfg) {
  cfg.validate();
  if (cfg.backend == TranscriberConfig::Backend::Remote)
    return std::make_unique<RemoteTranscriber>(cfg);
  return std::make_unique<FixtureTranscriber>(cfg.fixture_dir);
}

}  // namespace melaug::asr
