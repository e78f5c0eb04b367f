// include/voxsan/features/mcep.h

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

#ifndef VOXSAN_FEATURES_MCEP_H_
#define VOXSAN_FEATURES_MCEP_H_

#include <vector>

#include "voxsan/common/matrix.h"
#include "voxsan/vocoder/envelope.h"

namespace voxsan {

inline constexpr int kDefaultMcepOrder = 24;
inline constexpr double kDefaultWarp = 0.42;

// frames x (order + 1) mel-cepstra; column 0 is the energy term.
struct McepTrack {
  Matrix values;
  double warp = kDefaultWarp;
  int sample_rate = 16000;

  std::size_t frames() const { return values.rows(); }
  int order() const { return static_cast<int>(values.cols()) - 1; }
};

// Frequency (radians) after the first-order all-pass warp.
double WarpFrequency(double omega, double alpha);

// Warp whose axis best fits the mel scale m = ln(1 + f / 1000) between DC
// and Nyquist in the least-squares sense.
double FitMelWarp(int sample_rate);

// Fits  0.5 ln P(w) ~ sum_m c_m cos(m warp(w))  per frame by weighted
// least squares on the warped axis, weights being the warp's derivative
// so every stretch of the mel axis counts equally. The normal matrix is
// factored once per call.
// Throws kNonPositiveEnvelope, kInvalidArgument.
McepTrack EnvelopeToMcep(const SpectralEnvelope &envelope,
                         int order = kDefaultMcepOrder,
                         double warp = kDefaultWarp);

SpectralEnvelope McepToEnvelope(const McepTrack &mcep, int fft_size);

// Mean over frames of the RMS log-spectral difference in dB.
double LogSpectralDistortion(const SpectralEnvelope &a,
                             const SpectralEnvelope &b);

}  // namespace voxsan

#endif  // VOXSAN_FEATURES_MCEP_H_
