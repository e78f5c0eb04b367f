// include/voxsan/vocoder/dsp.h

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

#ifndef VOXSAN_VOCODER_DSP_H_
#define VOXSAN_VOCODER_DSP_H_

#include <complex>
#include <span>
#include <vector>

#include "voxsan/vocoder/fft.h"

namespace voxsan::dsp {

inline constexpr double kSafeGuardMinimum = 1e-12;
inline constexpr double kEps = 2.220446049250313e-16;

// Piecewise-linear interpolation of (x, y) at xi; x must be increasing.
// Queries outside [x.front(), x.back()] extrapolate from the end segments.
std::vector<double> Interp1(std::span<const double> x,
                            std::span<const double> y,
                            std::span<const double> xi);

// Same as Interp1 for y sampled on the uniform grid x0 + k * dx.
std::vector<double> Interp1Uniform(double x0, double dx,
                                   std::span<const double> y,
                                   std::span<const double> xi);

// Moving average of a half spectrum (fft_size / 2 + 1 bins) over `width` Hz,
// with mirrored edges.
std::vector<double> LinearSmoothing(std::span<const double> half_spectrum,
                                    double width, int fs, int fft_size);

// Folds the spectrum below f0 back onto itself; the region [0, f0] of a
// short F0-adaptive window otherwise loses the mirrored negative-frequency
// energy.
std::vector<double> DcCorrection(std::span<const double> half_spectrum,
                                 double f0, int fs, int fft_size);

std::vector<double> NuttallWindow(int length);

// Minimum-phase spectrum from a half log-amplitude spectrum (natural log)
// via the folded real cepstrum.
class MinimumPhase {
 public:
  explicit MinimumPhase(int fft_size);

  // log_amplitude has fft_size / 2 + 1 entries. The returned span stays
  // valid until the next call.
  std::span<const std::complex<double>> Compute(
      std::span<const double> log_amplitude);

 private:
  int fft_size_;
  ForwardRealFft forward_;
  InverseRealFft inverse_;
  std::vector<std::complex<double>> result_;
};

}  // namespace voxsan::dsp

#endif  // VOXSAN_VOCODER_DSP_H_
