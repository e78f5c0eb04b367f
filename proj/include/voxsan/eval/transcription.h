// include/voxsan/eval/transcription.h

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

#ifndef VOXSAN_EVAL_TRANSCRIPTION_H_
#define VOXSAN_EVAL_TRANSCRIPTION_H_

#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "voxsan/corpus/audio.h"
#include "voxsan/corpus/manifest.h"

namespace voxsan {

struct TranscriptionRequest {
  std::string key;  // clip identity, e.g. the manifest relative path
  std::string language = "en-US";
};

class TranscriptionProvider {
 public:
  virtual ~TranscriptionProvider() = default;
  virtual std::string Name() const = 0;
  // Throws kProviderUnavailable or kProviderTimeout.
  virtual std::vector<std::string> Transcribe(
      const AudioClip &clip, const TranscriptionRequest &request) = 0;
};

// Answers with the manifest transcript registered under the request key,
// whatever the audio. Unknown keys get an empty word sequence.
class StubTranscriber : public TranscriptionProvider {
 public:
  StubTranscriber() = default;
  explicit StubTranscriber(const Corpus &corpus);
  void Add(const std::string &key, std::vector<std::string> words);
  std::string Name() const override { return "offline-stub"; }
  std::vector<std::string> Transcribe(
      const AudioClip &clip, const TranscriptionRequest &request) override;

 private:
  std::map<std::string, std::vector<std::string>> transcripts_;
};

struct HttpTranscriberOptions {
  std::string url;  // http://host[:port]/path or https://...
  std::string token_env = "VOXSAN_STT_TOKEN";
  double timeout_seconds = 30.0;
};

// POSTs the clip as 16-bit 16 kHz mono WAV with the language in the
// X-Language header and, when the token variable is set, a bearer token.
// Expects JSON {"words": [...]} or {"transcript": "..."}.
class HttpTranscriber : public TranscriptionProvider {
 public:
  explicit HttpTranscriber(HttpTranscriberOptions options);
  std::string Name() const override { return "http:" + options_.url; }
  std::vector<std::string> Transcribe(
      const AudioClip &clip, const TranscriptionRequest &request) override;

 private:
  HttpTranscriberOptions options_;
};

// Memoizes another provider by the SHA-256 of (provider name, language,
// 16-bit PCM audio). With a cache directory, entries persist as
// <hex>.txt files holding one word per line. Safe to share between threads.
class CachedTranscriber : public TranscriptionProvider {
 public:
  CachedTranscriber(TranscriptionProvider &inner, std::string cache_dir = {});
  std::string Name() const override { return inner_.Name(); }
  std::vector<std::string> Transcribe(
      const AudioClip &clip, const TranscriptionRequest &request) override;
  int hits() const;
  int misses() const;

 private:
  TranscriptionProvider &inner_;
  std::string cache_dir_;
  mutable std::mutex mutex_;
  std::map<std::string, std::vector<std::string>> memory_;
  int hits_ = 0;
  int misses_ = 0;
};

std::string Sha256Hex(std::span<const std::uint8_t> bytes);

}  // namespace voxsan

#endif  // VOXSAN_EVAL_TRANSCRIPTION_H_
