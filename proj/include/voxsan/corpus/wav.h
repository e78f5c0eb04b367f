// include/voxsan/corpus/wav.h

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

#ifndef VOXSAN_CORPUS_WAV_H_
#define VOXSAN_CORPUS_WAV_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "voxsan/corpus/audio.h"

namespace voxsan {

// Reads RIFF/WAVE files holding 8/16/24/32-bit integer PCM or 32-bit float
// samples (plain or WAVE_FORMAT_EXTENSIBLE), one or two channels. Stereo is
// averaged to mono; integer samples are scaled by 2^-(bits-1).
// Throws kIoFailure, kUnsupportedFormat or kCorruptHeader.
AudioClip ReadWav(const std::string &path);
AudioClip DecodeWav(std::span<const std::uint8_t> bytes);

struct WavWriteReport {
  std::size_t clipped_samples = 0;  // samples with |x| > 1 that were saturated
  bool clipping_warning() const { return clipped_samples > 0; }
};

// Writes 16-bit little-endian mono PCM at clip.sample_rate. Samples are
// rounded to the nearest 2^-15 step and saturated to [-1, 1 - 2^-15].
WavWriteReport WriteWav(const AudioClip &clip, const std::string &path);
std::vector<std::uint8_t> EncodeWav16(const AudioClip &clip,
                                      WavWriteReport *report = nullptr);

}  // namespace voxsan

#endif  // VOXSAN_CORPUS_WAV_H_
