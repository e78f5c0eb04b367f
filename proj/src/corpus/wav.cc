// src/corpus/wav.cc

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

#include "voxsan/corpus/wav.h"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <optional>

#include "voxsan/common/binary_io.h"
#include "voxsan/common/error.h"

namespace voxsan {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

struct FormatChunk {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t block_align = 0;
  std::uint16_t bits = 0;
};

FormatChunk ParseFormat(std::span<const std::uint8_t> body) {
  if (body.size() < 16)
    throw Error(ErrorCode::kCorruptHeader, "fmt chunk shorter than 16 bytes");
  ByteReader r(body, static_cast<int>(ErrorCode::kCorruptHeader));
  FormatChunk fmt;
  fmt.format = r.GetU16();
  fmt.channels = r.GetU16();
  fmt.sample_rate = r.GetU32();
  r.GetU32();  // byte rate
  fmt.block_align = r.GetU16();
  fmt.bits = r.GetU16();
  if (fmt.format == kFormatExtensible) {
    if (body.size() < 40)
      throw Error(ErrorCode::kCorruptHeader, "truncated extensible fmt chunk");
    r.GetU16();  // cbSize
    r.GetU16();  // valid bits
    r.GetU32();  // channel mask
    fmt.format = r.GetU16();  // first two bytes of the subformat GUID
  }
  return fmt;
}

double DecodeSample(const std::uint8_t *p, const FormatChunk &fmt) {
  switch (fmt.bits) {
    case 8:
      return (static_cast<int>(p[0]) - 128) / 128.0;
    case 16: {
      auto v = static_cast<std::int16_t>(p[0] | (p[1] << 8));
      return v / 32768.0;
    }
    case 24: {
      std::int32_t v = p[0] | (p[1] << 8) | (p[2] << 16);
      if (v & 0x800000) v -= 0x1000000;
      return v / 8388608.0;
    }
    case 32: {
      std::uint32_t u = static_cast<std::uint32_t>(p[0]) |
                        (static_cast<std::uint32_t>(p[1]) << 8) |
                        (static_cast<std::uint32_t>(p[2]) << 16) |
                        (static_cast<std::uint32_t>(p[3]) << 24);
      if (fmt.format == kFormatFloat) {
        float f;
        std::memcpy(&f, &u, sizeof f);
        return f;
      }
      return static_cast<std::int32_t>(u) / 2147483648.0;
    }
    default:
      return 0.0;
  }
}

}  // namespace

AudioClip DecodeWav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    throw Error(ErrorCode::kCorruptHeader, "missing RIFF/WAVE signature");
  ByteReader reader(bytes, static_cast<int>(ErrorCode::kCorruptHeader));
  reader.GetTag(4);
  std::uint32_t riff_size = reader.GetU32();
  reader.GetTag(4);
  if (static_cast<std::uint64_t>(riff_size) + 8 > bytes.size())
    throw Error(ErrorCode::kCorruptHeader,
                "RIFF size " + std::to_string(riff_size) +
                    " exceeds file length " + std::to_string(bytes.size()));

  std::optional<FormatChunk> fmt;
  std::optional<std::span<const std::uint8_t>> data;
  while (reader.remaining() >= 8 && !data) {
    std::string id = reader.GetTag(4);
    std::uint32_t size = reader.GetU32();
    if (size > reader.remaining())
      throw Error(ErrorCode::kCorruptHeader,
                  "chunk '" + id + "' size " + std::to_string(size) +
                      " runs past end of file");
    auto body = reader.GetBytes(size);
    if (size % 2 == 1 && reader.remaining() > 0) reader.GetU8();
    if (id == "fmt ") {
      fmt = ParseFormat(body);
    } else if (id == "data") {
      data = body;
    }
  }
  if (!fmt) throw Error(ErrorCode::kCorruptHeader, "no fmt chunk");
  if (!data) throw Error(ErrorCode::kCorruptHeader, "no data chunk");

  if (fmt->format != kFormatPcm && fmt->format != kFormatFloat)
    throw Error(ErrorCode::kUnsupportedFormat,
                "codec " + std::to_string(fmt->format) + " is not PCM");
  bool bits_ok = fmt->format == kFormatFloat
                     ? fmt->bits == 32
                     : (fmt->bits == 8 || fmt->bits == 16 || fmt->bits == 24 ||
                        fmt->bits == 32);
  if (!bits_ok)
    throw Error(ErrorCode::kUnsupportedFormat,
                std::to_string(fmt->bits) + "-bit samples are not supported");
  if (fmt->channels != 1 && fmt->channels != 2)
    throw Error(ErrorCode::kUnsupportedFormat,
                std::to_string(fmt->channels) + " channels");
  if (fmt->sample_rate == 0)
    throw Error(ErrorCode::kCorruptHeader, "zero sample rate");
  const int bytes_per_sample = fmt->bits / 8;
  if (fmt->block_align != bytes_per_sample * fmt->channels)
    throw Error(ErrorCode::kCorruptHeader, "block_align inconsistent with "
                                           "channels and bit depth");

  AudioClip clip;
  clip.sample_rate = static_cast<int>(fmt->sample_rate);
  const std::size_t frames = data->size() / fmt->block_align;
  clip.samples.resize(frames);
  for (std::size_t i = 0; i < frames; ++i) {
    const std::uint8_t *frame = data->data() + i * fmt->block_align;
    double sum = 0.0;
    for (int c = 0; c < fmt->channels; ++c)
      sum += DecodeSample(frame + c * bytes_per_sample, *fmt);
    double v = sum / fmt->channels;
    if (!std::isfinite(v))
      throw Error(ErrorCode::kCorruptHeader, "non-finite float sample");
    clip.samples[i] = std::clamp(v, -1.0, 1.0);
  }
  return clip;
}

AudioClip ReadWav(const std::string &path) {
  std::vector<std::uint8_t> bytes = ReadFileBytes(path);
  try {
    AudioClip clip = DecodeWav(bytes);
    clip.source_path = path;
    return clip;
  } catch (const Error &e) {
    throw Error(e.code(), path + ": " + e.message());
  }
}

std::vector<std::uint8_t> EncodeWav16(const AudioClip &clip,
                                      WavWriteReport *report) {
  if (clip.sample_rate <= 0)
    throw Error(ErrorCode::kInvalidArgument, "sample rate must be positive");
  const std::uint32_t data_bytes =
      static_cast<std::uint32_t>(clip.samples.size() * 2);
  ByteWriter w;
  w.bytes().reserve(44 + data_bytes);
  w.PutTag("RIFF");
  w.PutU32(36 + data_bytes);
  w.PutTag("WAVE");
  w.PutTag("fmt ");
  w.PutU32(16);
  w.PutU16(kFormatPcm);
  w.PutU16(1);
  w.PutU32(static_cast<std::uint32_t>(clip.sample_rate));
  w.PutU32(static_cast<std::uint32_t>(clip.sample_rate) * 2);
  w.PutU16(2);
  w.PutU16(16);
  w.PutTag("data");
  w.PutU32(data_bytes);
  std::size_t clipped = 0;
  for (double x : clip.samples) {
    if (!std::isfinite(x) || std::fabs(x) > 1.0) ++clipped;
    double scaled = std::isfinite(x) ? std::round(x * 32768.0) : 0.0;
    scaled = std::clamp(scaled, -32768.0, 32767.0);
    w.PutI16(static_cast<std::int16_t>(scaled));
  }
  if (report) report->clipped_samples = clipped;
  return std::move(w.bytes());
}

WavWriteReport WriteWav(const AudioClip &clip, const std::string &path) {
  WavWriteReport report;
  auto bytes = EncodeWav16(clip, &report);
  WriteFileBytes(path, bytes);
  return report;
}

double Rms(const AudioClip &clip) {
  if (clip.samples.empty()) return 0.0;
  double sum = 0.0;
  for (double x : clip.samples) sum += x * x;
  return std::sqrt(sum / clip.samples.size());
}

double PeakAbs(const AudioClip &clip) {
  double peak = 0.0;
  for (double x : clip.samples) peak = std::max(peak, std::fabs(x));
  return peak;
}

AudioClip PeakNormalize(AudioClip clip, double peak) {
  double current = PeakAbs(clip);
  if (current <= 0.0) return clip;
  double gain = peak / current;
  for (double &x : clip.samples) x *= gain;
  return clip;
}

}  // namespace voxsan
