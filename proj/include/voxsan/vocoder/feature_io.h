// include/voxsan/vocoder/feature_io.h

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

#ifndef VOXSAN_VOCODER_FEATURE_IO_H_
#define VOXSAN_VOCODER_FEATURE_IO_H_

#include <cstdint>
#include <string>
#include <vector>

#include "voxsan/vocoder/vocoder.h"

namespace voxsan {

inline constexpr std::uint32_t kFeatureDumpVersion = 1;

// Layout, all little-endian:
//   "VXFT" u32 version u32 sample_rate f64 frame_period_ms
//   f64 f0_floor f64 f0_ceil u32 fft_size u32 frames u32 bins
//   f64[frames] f0, f64[frames * bins] envelope, f64[frames * bins] ap
std::vector<std::uint8_t> EncodeFeatures(const VocoderFeatures &features);
// Throws kCorruptHeader, kVersionMismatch.
VocoderFeatures DecodeFeatures(const std::vector<std::uint8_t> &bytes);

void WriteFeatures(const VocoderFeatures &features, const std::string &path);
VocoderFeatures ReadFeatures(const std::string &path);

}  // namespace voxsan

#endif  // VOXSAN_VOCODER_FEATURE_IO_H_
