// include/voxsan/vocoder/envelope.h

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

#ifndef VOXSAN_VOCODER_ENVELOPE_H_
#define VOXSAN_VOCODER_ENVELOPE_H_

#include "voxsan/common/matrix.h"
#include "voxsan/corpus/audio.h"
#include "voxsan/vocoder/f0.h"

namespace voxsan {

// frames x (fft_size / 2 + 1) smoothed power spectra; strictly positive.
struct SpectralEnvelope {
  Matrix values;
  int fft_size = 1024;
  int sample_rate = 16000;

  std::size_t frames() const { return values.rows(); }
  std::size_t bins() const { return values.cols(); }
};

struct EnvelopeOptions {
  int fft_size = 1024;
  // Spectral recovery weight of the compensation lifter.
  double q1 = -0.15;
  // Analysis frequency used for unvoiced frames (and F0 below what the
  // FFT length can resolve).
  double default_f0 = 160.0;
};

// Lowest F0 whose 3-period window still fits in fft_size samples.
double EnvelopeF0Floor(int sample_rate, int fft_size);

// Pitch-adaptive envelope: a Hanning window three periods long, power
// spectrum with the below-F0 fold-back correction, linear smoothing over
// 2F0/3, then cepstral liftering that removes the harmonic ripple at
// quefrency 1/F0 and compensates the smoothing. Throws kInconsistentFrames
// when the F0 track does not match the clip's frame grid.
SpectralEnvelope EstimateEnvelope(const AudioClip &clip, const F0Track &f0,
                                  const EnvelopeOptions &options = {});

}  // namespace voxsan

#endif  // VOXSAN_VOCODER_ENVELOPE_H_
