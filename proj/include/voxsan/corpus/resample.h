// include/voxsan/corpus/resample.h

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

#ifndef VOXSAN_CORPUS_RESAMPLE_H_
#define VOXSAN_CORPUS_RESAMPLE_H_

#include "voxsan/corpus/audio.h"

namespace voxsan {

struct ResampleOptions {
  // Kernel half-width in zero crossings of the cutoff sinc, measured at the
  // lower of the two rates; 32 gives 64 taps per polyphase branch.
  int half_zero_crossings = 32;
  double kaiser_beta = 8.6;
  // Cutoff as a fraction of the lower Nyquist frequency.
  double rolloff = 0.95;
};

// Rational-ratio polyphase resampler with a Kaiser-windowed sinc kernel.
// Output length is ceil(n * target / source); equal rates return a copy.
AudioClip Resample(const AudioClip &clip, int target_rate,
                   const ResampleOptions &options = {});

}  // namespace voxsan

#endif  // VOXSAN_CORPUS_RESAMPLE_H_
