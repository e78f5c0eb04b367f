// include/voxsan/vocoder/f0.h

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

#ifndef VOXSAN_VOCODER_F0_H_
#define VOXSAN_VOCODER_F0_H_

#include <cstddef>
#include <vector>

#include "voxsan/corpus/audio.h"

namespace voxsan {

// Per-frame fundamental frequency; 0.0 marks an unvoiced frame. Frame i is
// centred at i * frame_period_ms.
struct F0Track {
  std::vector<double> values;
  double frame_period_ms = 5.0;
  double floor_hz = 70.0;
  double ceil_hz = 500.0;

  std::size_t size() const { return values.size(); }
  std::size_t VoicedCount() const;
};

struct F0Options {
  double frame_period_ms = 5.0;
  double floor_hz = 70.0;
  double ceil_hz = 500.0;
  double channels_in_octave = 2.0;
  // Largest relative frame-to-frame jump kept during contour repair.
  double allowed_range = 0.1;
  // Minimum normalized autocorrelation at the estimated period for a frame
  // to stay voiced.
  double voicing_threshold = 0.5;
};

// floor(duration / frame_period) + 1.
std::size_t FrameCount(std::size_t num_samples, int sample_rate,
                       double frame_period_ms);

// Zero-crossing / peak interval F0 estimator over a bank of low-pass filters
// with one band per half octave. Each band yields a candidate from the four
// interval measurements; the band whose measurements agree best wins, and the
// contour is then repaired for jumps and short voiced runs. Frames whose
// waveform does not repeat at the chosen period are marked unvoiced.
// Throws kInvalidArgument or kClipTooShort.
F0Track EstimateF0(const AudioClip &clip, const F0Options &options = {});

}  // namespace voxsan

#endif  // VOXSAN_VOCODER_F0_H_
