// tests/corpus_test.cc

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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>

#include "doctest.h"
#include "voxsan/common/binary_io.h"
#include "voxsan/common/error.h"
#include "voxsan/corpus/labels.h"
#include "voxsan/corpus/manifest.h"
#include "voxsan/corpus/resample.h"
#include "voxsan/corpus/wav.h"
#include "voxsan/vocoder/fft.h"

namespace fs = std::filesystem;
using namespace voxsan;

namespace {

fs::path ScratchDir(const std::string &name) {
  auto dir = fs::temp_directory_path() / ("voxsan_corpus_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

// Minimal RIFF writer for formats the library itself never emits.
std::vector<std::uint8_t> RawWav(int format, int channels, int bits, int rate,
                                 const std::vector<std::uint8_t> &payload) {
  ByteWriter w;
  w.PutTag("RIFF");
  w.PutU32(36 + payload.size());
  w.PutTag("WAVE");
  w.PutTag("fmt ");
  w.PutU32(16);
  w.PutU16(format);
  w.PutU16(channels);
  w.PutU32(rate);
  w.PutU32(rate * channels * bits / 8);
  w.PutU16(channels * bits / 8);
  w.PutU16(bits);
  w.PutTag("data");
  w.PutU32(payload.size());
  w.PutBytes(payload);
  return w.bytes();
}

AudioClip Tone(double hz, int rate, double seconds, double amp = 0.5) {
  AudioClip c;
  c.sample_rate = rate;
  c.samples.resize(static_cast<std::size_t>(rate * seconds));
  for (std::size_t i = 0; i < c.samples.size(); ++i)
    c.samples[i] = amp * std::sin(2.0 * std::numbers::pi * hz * i / rate);
  return c;
}

double PeakFrequency(const AudioClip &c) {
  const int n = NextPowerOfTwo(static_cast<int>(c.samples.size()));
  ForwardRealFft fft(n);
  auto w = fft.waveform();
  std::fill(w.begin(), w.end(), 0.0);
  std::copy(c.samples.begin(), c.samples.end(), w.begin());
  fft.Execute();
  auto s = fft.spectrum();
  std::size_t best = 0;
  for (std::size_t k = 1; k < s.size(); ++k)
    if (std::abs(s[k]) > std::abs(s[best])) best = k;
  return static_cast<double>(best) * c.sample_rate / n;
}

}  // namespace

TEST_CASE("wav: constant 16-bit value scales to one half") {
  ByteWriter payload;
  for (int i = 0; i < 100; ++i) payload.PutI16(16384);
  auto clip = DecodeWav(RawWav(1, 1, 16, 16000, payload.bytes()));
  CHECK(clip.sample_rate == 16000);
  REQUIRE(clip.size() == 100);
  for (double s : clip.samples) CHECK(std::abs(s - 0.5) <= std::ldexp(1.0, -15));
}

TEST_CASE("wav: stereo channels are averaged") {
  ByteWriter payload;
  for (int i = 0; i < 50; ++i) {
    payload.PutI16(16384);
    payload.PutI16(-16384);
  }
  auto clip = DecodeWav(RawWav(1, 2, 16, 16000, payload.bytes()));
  REQUIRE(clip.size() == 50);
  for (double s : clip.samples) CHECK(s == 0.0);
}

TEST_CASE("wav: 8, 24, 32-bit integer and float payloads") {
  ByteWriter p8, p24, p32, pf;
  p8.PutU8(192);  // unsigned, midpoint 128
  p24.PutU8(0);
  p24.PutU8(0);
  p24.PutU8(0xC0);  // -0.5
  p32.PutU32(0x40000000u);
  pf.PutF32(-0.25f);
  CHECK(DecodeWav(RawWav(1, 1, 8, 8000, p8.bytes())).samples[0] == 0.5);
  CHECK(DecodeWav(RawWav(1, 1, 24, 8000, p24.bytes())).samples[0] == -0.5);
  CHECK(DecodeWav(RawWav(1, 1, 32, 8000, p32.bytes())).samples[0] == 0.5);
  CHECK(DecodeWav(RawWav(3, 1, 32, 8000, pf.bytes())).samples[0] == -0.25);
}

TEST_CASE("wav: codec and header errors") {
  ByteWriter payload;
  payload.PutI16(0);
  auto check_code = [](const std::vector<std::uint8_t> &bytes, ErrorCode code) {
    try {
      DecodeWav(bytes);
      FAIL("expected an error");
    } catch (const Error &e) {
      CHECK(e.code() == code);
    }
  };
  check_code(RawWav(2, 1, 16, 16000, payload.bytes()),
             ErrorCode::kUnsupportedFormat);  // ADPCM
  check_code(RawWav(1, 3, 16, 16000, payload.bytes()),
             ErrorCode::kUnsupportedFormat);
  auto bytes = RawWav(1, 1, 16, 16000, payload.bytes());
  bytes[4] = 0xFF;  // RIFF size past end of file
  bytes[5] = 0xFF;
  check_code(bytes, ErrorCode::kCorruptHeader);
  auto truncated = RawWav(1, 1, 16, 16000, payload.bytes());
  truncated.resize(truncated.size() - 1);
  check_code(truncated, ErrorCode::kCorruptHeader);
  CHECK_THROWS_AS(ReadWav("/nonexistent/x.wav"), Error);
}

TEST_CASE("wav: sine round trip stays within quantization") {
  auto dir = ScratchDir("sine");
  auto clip = Tone(440.0, 16000, 1.0);
  auto report = WriteWav(clip, (dir / "a.wav").string());
  CHECK_FALSE(report.clipping_warning());
  auto back = ReadWav((dir / "a.wav").string());
  REQUIRE(back.size() == clip.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < clip.size(); ++i)
    worst = std::max(worst, std::abs(back.samples[i] - clip.samples[i]));
  CHECK(worst < std::ldexp(1.0, -14));
}

TEST_CASE("wav: white noise round trip") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  AudioClip clip;
  clip.samples.resize(4000);
  for (double &s : clip.samples) s = 0.9 * u(rng);
  auto back = DecodeWav(EncodeWav16(clip, nullptr));
  for (std::size_t i = 0; i < clip.size(); ++i)
    CHECK(std::abs(back.samples[i] - clip.samples[i]) < std::ldexp(1.0, -14));
}

TEST_CASE("wav: saturation and empty clips") {
  AudioClip clip;
  clip.samples = {1.5, -2.0, 0.25};
  WavWriteReport report;
  auto back = DecodeWav(EncodeWav16(clip, &report));
  CHECK(report.clipping_warning());
  CHECK(report.clipped_samples == 2);
  CHECK(back.samples[0] == 1.0 - std::ldexp(1.0, -15));
  CHECK(back.samples[1] == -1.0);

  AudioClip empty;
  auto decoded = DecodeWav(EncodeWav16(empty, nullptr));
  CHECK(decoded.size() == 0);
  CHECK(decoded.sample_rate == 16000);
}

TEST_CASE("resample: identity, tone frequency and duration") {
  auto clip = Tone(440.0, 48000, 1.0);
  auto same = Resample(clip, 48000);
  CHECK(same.samples == clip.samples);

  auto down = Resample(clip, 16000);
  CHECK(down.sample_rate == 16000);
  CHECK(std::abs(PeakFrequency(down) - 440.0) <= 2.0);
  CHECK(std::abs(down.DurationSeconds() - clip.DurationSeconds()) <=
        1.0 / 16000);

  auto up = Resample(Tone(1000.0, 16000, 0.5), 22050);
  CHECK(std::abs(PeakFrequency(up) - 1000.0) <= 2.0);
  CHECK(std::abs(up.DurationSeconds() - 0.5) <= 1.0 / 16000);
  CHECK_THROWS_AS(Resample(clip, 0), Error);
}

TEST_CASE("resample: content above the new Nyquist is suppressed") {
  auto clip = Tone(10000.0, 48000, 0.5);
  auto down = Resample(clip, 16000);
  CHECK(Rms(down) < 0.01 * Rms(clip));
}

TEST_CASE("labels: dataset filename scheme") {
  FieldScheme scheme;
  scheme.field_count = 7;
  scheme.emotion_field = 2;
  scheme.speaker_field = 6;
  scheme.intensity_field = 3;
  scheme.emotion_codes = {{"05", Emotion::kAngry}, {"01", Emotion::kNeutral}};
  auto labels = ParseDatasetFilename("03-01-05-01-02-01-12.wav", scheme);
  CHECK(labels.emotion == Emotion::kAngry);
  CHECK(labels.speaker_id == "12");
  CHECK(labels.intensity == std::optional<std::string>("01"));
  CHECK_FALSE(labels.transcript.has_value());

  try {
    ParseDatasetFilename("03-01-05.wav", scheme);
    FAIL("expected SchemeMismatch");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kSchemeMismatch);
  }
  try {
    ParseDatasetFilename("03-01-08-01-02-01-12.wav", scheme);
    FAIL("expected UnknownCode");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kUnknownCode);
  }
}

TEST_CASE("labels: emotion names") {
  CHECK(ParseEmotion("Angry") == Emotion::kAngry);
  CHECK(ParseEmotion("4") == Emotion::kAngry);
  CHECK(ParseEmotion("0") == Emotion::kNeutral);
  CHECK_FALSE(ParseEmotion("bored").has_value());
  CHECK(EmotionName(Emotion::kSurprised) == "surprised");
  CHECK(SplitWords("  kids are\ttalking ") ==
        std::vector<std::string>{"kids", "are", "talking"});
}

TEST_CASE("manifest: loading and errors") {
  auto dir = ScratchDir("manifest");
  WriteWav(Tone(220.0, 16000, 0.1), (dir / "a.wav").string());
  fs::create_directories(dir / "sub");
  WriteWav(Tone(220.0, 16000, 0.1), (dir / "sub" / "b.wav").string());
  auto write = [&](const std::string &name, const std::string &text) {
    std::ofstream(dir / name) << text;
    return (dir / name).string();
  };

  auto empty = LoadManifest(write("empty.csv", "path,speaker,emotion,transcript\n"));
  CHECK(empty.empty());

  auto corpus = LoadManifest(write(
      "ok.csv",
      "path,speaker,emotion,transcript,intensity\n"
      "sub/b.wav,s2,angry,\"dogs are sitting, by the door\",strong\n"
      "a.wav,s1,neutral,,\n"));
  REQUIRE(corpus.size() == 2);
  CHECK(corpus.entries[0].relative_path == "sub/b.wav");
  CHECK(corpus.entries[0].labels.emotion == Emotion::kAngry);
  CHECK(corpus.entries[0].labels.transcript->size() == 6);
  CHECK(corpus.entries[0].labels.intensity == std::optional<std::string>("strong"));
  CHECK(corpus.entries[1].labels.speaker_id == "s1");
  CHECK_FALSE(corpus.entries[1].labels.transcript.has_value());
  CHECK(fs::exists(corpus.entries[1].path));

  auto code_of = [&](const std::string &text) {
    try {
      LoadManifest(write("bad.csv", text));
    } catch (const Error &e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  CHECK(code_of("path,speaker,transcript\n") == ErrorCode::kMissingColumn);
  CHECK(code_of("path,speaker,emotion,transcript\na.wav,s1,bored,\n") ==
        ErrorCode::kUnknownEmotionLabel);
  CHECK(code_of("path,speaker,emotion,transcript\nzz.wav,s1,sad,\n") ==
        ErrorCode::kMissingFile);
  CHECK(code_of("path,speaker,emotion,transcript\na.wav,s1,sad,\na.wav,s1,sad,\n") ==
        ErrorCode::kDuplicatePath);

  WriteManifest(corpus, (dir / "copy.csv").string());
  auto again = LoadManifest((dir / "copy.csv").string());
  REQUIRE(again.size() == 2);
  CHECK(again.entries[0].labels.transcript == corpus.entries[0].labels.transcript);
  CHECK(again.entries[1].relative_path == "a.wav");
}
