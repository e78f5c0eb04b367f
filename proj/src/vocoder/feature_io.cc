// src/vocoder/feature_io.cc

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

#include "voxsan/vocoder/feature_io.h"

#include "voxsan/common/binary_io.h"
#include "voxsan/common/error.h"

namespace voxsan {

std::vector<std::uint8_t> EncodeFeatures(const VocoderFeatures &features) {
  features.Validate();
  ByteWriter w;
  w.PutTag("VXFT");
  w.PutU32(kFeatureDumpVersion);
  w.PutU32(static_cast<std::uint32_t>(features.sample_rate));
  w.PutF64(features.f0.frame_period_ms);
  w.PutF64(features.f0.floor_hz);
  w.PutF64(features.f0.ceil_hz);
  w.PutU32(static_cast<std::uint32_t>(features.envelope.fft_size));
  w.PutU32(static_cast<std::uint32_t>(features.frames()));
  w.PutU32(static_cast<std::uint32_t>(features.envelope.bins()));
  for (double v : features.f0.values) w.PutF64(v);
  for (double v : features.envelope.values.data()) w.PutF64(v);
  for (double v : features.aperiodicity.values.data()) w.PutF64(v);
  return std::move(w.bytes());
}

VocoderFeatures DecodeFeatures(const std::vector<std::uint8_t> &bytes) {
  ByteReader r(bytes, static_cast<int>(ErrorCode::kCorruptHeader));
  if (r.GetTag(4) != "VXFT")
    throw Error(ErrorCode::kCorruptHeader, "not a feature dump");
  const std::uint32_t version = r.GetU32();
  if (version != kFeatureDumpVersion)
    throw Error(ErrorCode::kVersionMismatch,
                "feature dump version " + std::to_string(version));
  VocoderFeatures f;
  f.sample_rate = static_cast<int>(r.GetU32());
  f.f0.frame_period_ms = r.GetF64();
  f.f0.floor_hz = r.GetF64();
  f.f0.ceil_hz = r.GetF64();
  const int fft_size = static_cast<int>(r.GetU32());
  const std::size_t frames = r.GetU32();
  const std::size_t bins = r.GetU32();
  if (bins != static_cast<std::size_t>(fft_size / 2 + 1) ||
      r.remaining() != 8 * (frames + 2 * frames * bins))
    throw Error(ErrorCode::kCorruptHeader, "feature dump size mismatch");
  f.f0.values.resize(frames);
  for (double &v : f.f0.values) v = r.GetF64();
  f.envelope.fft_size = fft_size;
  f.envelope.sample_rate = f.sample_rate;
  f.envelope.values = Matrix(frames, bins);
  for (double &v : f.envelope.values.data()) v = r.GetF64();
  f.aperiodicity.values = Matrix(frames, bins);
  for (double &v : f.aperiodicity.values.data()) v = r.GetF64();
  return f;
}

void WriteFeatures(const VocoderFeatures &features, const std::string &path) {
  WriteFileBytes(path, EncodeFeatures(features));
}

VocoderFeatures ReadFeatures(const std::string &path) {
  return DecodeFeatures(ReadFileBytes(path));
}

}  // namespace voxsan
