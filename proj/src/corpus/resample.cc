// src/corpus/resample.cc

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

#include "voxsan/corpus/resample.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "voxsan/common/error.h"

namespace voxsan {

namespace {

double Sinc(double x) {
  if (std::fabs(x) < 1e-12) return 1.0;
  return std::sin(std::numbers::pi * x) / (std::numbers::pi * x);
}

double Kaiser(double u, double beta) {
  if (std::fabs(u) > 1.0) return 0.0;
  return std::cyl_bessel_i(0.0, beta * std::sqrt(1.0 - u * u)) /
         std::cyl_bessel_i(0.0, beta);
}

}  // namespace

AudioClip Resample(const AudioClip &clip, int target_rate,
                   const ResampleOptions &options) {
  if (target_rate <= 0)
    throw Error(ErrorCode::kInvalidArgument, "target rate must be positive");
  if (clip.sample_rate <= 0)
    throw Error(ErrorCode::kInvalidArgument, "source rate must be positive");
  if (target_rate == clip.sample_rate) return clip;

  const long g = std::gcd(static_cast<long>(clip.sample_rate),
                          static_cast<long>(target_rate));
  const long up = target_rate / g;
  const long down = clip.sample_rate / g;
  const double ratio = static_cast<double>(up) / static_cast<double>(down);

  // Everything below is in units of input samples.
  const double cutoff = 0.5 * options.rolloff * std::min(1.0, ratio);
  const double half_width =
      options.half_zero_crossings * std::max(1.0, 1.0 / ratio);
  const long reach = static_cast<long>(std::ceil(half_width));
  const long taps = 2 * reach + 2;

  // table[phase][t] weights x[base - reach + t] for outputs whose exact
  // input position is base + phase / up.
  std::vector<double> table(static_cast<std::size_t>(up * taps));
  for (long phase = 0; phase < up; ++phase) {
    const double frac = static_cast<double>(phase) / up;
    double sum = 0.0;
    for (long t = 0; t < taps; ++t) {
      double tau = static_cast<double>(t - reach) - frac;
      double h = 2.0 * cutoff * Sinc(2.0 * cutoff * tau) *
                 Kaiser(tau / half_width, options.kaiser_beta);
      table[phase * taps + t] = h;
      sum += h;
    }
    // Unit DC gain per branch.
    for (long t = 0; t < taps; ++t) table[phase * taps + t] /= sum;
  }

  const long n_in = static_cast<long>(clip.samples.size());
  const long n_out = (n_in * up + down - 1) / down;
  AudioClip out;
  out.sample_rate = target_rate;
  out.source_path = clip.source_path;
  out.samples.assign(static_cast<std::size_t>(n_out), 0.0);
  for (long n = 0; n < n_out; ++n) {
    const long position = n * down;
    const long base = position / up;
    const long phase = position % up;
    const double *weights = &table[phase * taps];
    double acc = 0.0;
    long first = base - reach;
    long t0 = std::max(0L, -first);
    long t1 = std::min(taps, n_in - first);
    for (long t = t0; t < t1; ++t) acc += weights[t] * clip.samples[first + t];
    out.samples[n] = acc;
  }
  return out;
}

}  // namespace voxsan
