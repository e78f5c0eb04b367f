// src/eval/transcription.cc

// Copyright 2026 The voxsan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "voxsan/eval/transcription.h"

#include <openssl/evp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <httplib.h>
#include <json.hpp>
#include <sstream>

#include "voxsan/common/error.h"
#include "voxsan/corpus/resample.h"
#include "voxsan/corpus/wav.h"

namespace voxsan {

std::string Sha256Hex(std::span<const std::uint8_t> bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1)
    throw Error(ErrorCode::kIoFailure, "SHA-256 failed");
  static const char *kHex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 15]);
  }
  return out;
}

StubTranscriber::StubTranscriber(const Corpus &corpus) {
  for (const auto &entry : corpus.entries)
    if (entry.labels.transcript)
      transcripts_[entry.relative_path] = *entry.labels.transcript;
}

void StubTranscriber::Add(const std::string &key,
                          std::vector<std::string> words) {
  transcripts_[key] = std::move(words);
}

std::vector<std::string> StubTranscriber::Transcribe(
    const AudioClip &, const TranscriptionRequest &request) {
  const auto it = transcripts_.find(request.key);
  if (it == transcripts_.end()) return {};
  return it->second;
}

HttpTranscriber::HttpTranscriber(HttpTranscriberOptions options)
    : options_(std::move(options)) {}

std::vector<std::string> HttpTranscriber::Transcribe(
    const AudioClip &clip, const TranscriptionRequest &request) {
  const auto scheme_end = options_.url.find("://");
  if (scheme_end == std::string::npos)
    throw Error(ErrorCode::kProviderUnavailable,
                "transcription URL needs a scheme: " + options_.url);
  const auto path_start = options_.url.find('/', scheme_end + 3);
  const std::string origin = options_.url.substr(0, path_start);
  const std::string path =
      path_start == std::string::npos ? "/" : options_.url.substr(path_start);

  const AudioClip pcm = clip.sample_rate == 16000 ? clip : Resample(clip, 16000);
  const auto wav = EncodeWav16(pcm);

  httplib::Client client(origin);
  const auto seconds = static_cast<time_t>(options_.timeout_seconds);
  const auto micros = static_cast<time_t>(
      (options_.timeout_seconds - static_cast<double>(seconds)) * 1e6);
  client.set_connection_timeout(seconds, micros);
  client.set_read_timeout(seconds, micros);
  client.set_write_timeout(seconds, micros);
  httplib::Headers headers = {{"X-Language", request.language}};
  if (const char *token = std::getenv(options_.token_env.c_str()))
    headers.emplace("Authorization", std::string("Bearer ") + token);

  auto result = client.Post(path, headers,
                            reinterpret_cast<const char *>(wav.data()),
                            wav.size(), "audio/wav");
  if (!result) {
    const auto err = result.error();
    if (err == httplib::Error::ConnectionTimeout || err == httplib::Error::Read)
      throw Error(ErrorCode::kProviderTimeout,
                  "transcription request timed out: " + httplib::to_string(err));
    throw Error(ErrorCode::kProviderUnavailable,
                "transcription provider unreachable: " + httplib::to_string(err));
  }
  if (result->status != 200)
    throw Error(ErrorCode::kProviderUnavailable,
                "transcription provider answered HTTP " +
                    std::to_string(result->status));
  try {
    const auto body = nlohmann::json::parse(result->body);
    if (body.contains("words")) return body.at("words").get<std::vector<std::string>>();
    std::istringstream text(body.at("transcript").get<std::string>());
    std::vector<std::string> words;
    for (std::string w; text >> w;) words.push_back(w);
    return words;
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kProviderUnavailable,
                std::string("malformed transcription response: ") + e.what());
  }
}

CachedTranscriber::CachedTranscriber(TranscriptionProvider &inner,
                                     std::string cache_dir)
    : inner_(inner), cache_dir_(std::move(cache_dir)) {
  if (!cache_dir_.empty()) std::filesystem::create_directories(cache_dir_);
}

std::vector<std::string> CachedTranscriber::Transcribe(
    const AudioClip &clip, const TranscriptionRequest &request) {
  std::vector<std::uint8_t> material;
  for (const std::string &part : {inner_.Name(), request.language}) {
    material.insert(material.end(), part.begin(), part.end());
    material.push_back(0);
  }
  const auto pcm = EncodeWav16(clip);
  material.insert(material.end(), pcm.begin(), pcm.end());
  const std::string key = Sha256Hex(material);
  const std::string file =
      cache_dir_.empty() ? std::string()
                         : (std::filesystem::path(cache_dir_) / (key + ".txt")).string();
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = memory_.find(key); it != memory_.end()) {
      ++hits_;
      return it->second;
    }
    if (!file.empty()) {
      std::ifstream in(file);
      if (in) {
        std::vector<std::string> words;
        for (std::string w; std::getline(in, w);)
          if (!w.empty()) words.push_back(w);
        memory_[key] = words;
        ++hits_;
        return words;
      }
    }
  }
  auto words = inner_.Transcribe(clip, request);
  std::lock_guard<std::mutex> lock(mutex_);
  ++misses_;
  memory_[key] = words;
  if (!file.empty()) {
    const std::string tmp = file + ".tmp";
    {
      std::ofstream out(tmp);
      for (const auto &w : words) out << w << '\n';
    }
    std::filesystem::rename(tmp, file);
  }
  return words;
}

int CachedTranscriber::hits() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return hits_;
}

int CachedTranscriber::misses() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return misses_;
}

}  // namespace voxsan
