// include/voxsan/vocoder/aperiodicity.h

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

#ifndef VOXSAN_VOCODER_APERIODICITY_H_
#define VOXSAN_VOCODER_APERIODICITY_H_

#include "voxsan/common/matrix.h"
#include "voxsan/corpus/audio.h"
#include "voxsan/vocoder/f0.h"

namespace voxsan {

// frames x bins ratio of aperiodic to total power, each value in [0, 1].
struct Aperiodicity {
  Matrix values;

  std::size_t frames() const { return values.rows(); }
  std::size_t bins() const { return values.cols(); }
};

struct AperiodicityOptions {
  int fft_size = 1024;           // sets the output bin count
  double band_width_hz = 2000.0;  // spacing of the coarse analysis bands
  double upper_limit_hz = 15000.0;
  double min_f0_hz = 47.0;  // lower clamp on the analysis F0
};

int CoarseBandCount(int sample_rate, const AperiodicityOptions &options);

// Group-delay based band aperiodicity. For each voiced frame the F0-adaptive
// group delay is flattened by subtracting its smoothed version; inside each
// coarse band the share of the residual's power that does not sit in its
// strongest components measures the aperiodic fraction. Band values are
// interpolated (in dB) to full resolution. Unvoiced frames are 1.0.
// Throws kInconsistentFrames.
Aperiodicity EstimateAperiodicity(const AudioClip &clip, const F0Track &f0,
                                  const AperiodicityOptions &options = {});

}  // namespace voxsan

#endif  // VOXSAN_VOCODER_APERIODICITY_H_
