// include/voxsan/vocoder/synthesis.h

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

#ifndef VOXSAN_VOCODER_SYNTHESIS_H_
#define VOXSAN_VOCODER_SYNTHESIS_H_

#include <cstdint>
#include <random>

#include "voxsan/corpus/audio.h"
#include "voxsan/vocoder/aperiodicity.h"
#include "voxsan/vocoder/envelope.h"
#include "voxsan/vocoder/f0.h"

namespace voxsan {

struct SynthesisOptions {
  std::uint64_t seed = 20190131;
  // Pulse rate used to lay out noise-only segments in unvoiced regions.
  double unvoiced_pulse_hz = 500.0;
};

// Standard normal deviates from a 64-bit Mersenne Twister. Each pair of
// uniforms (u1 in (0, 1], u2 in [0, 1), 53-bit resolution) yields two
// deviates by the Box-Muller transform:
//   z0 = sqrt(-2 ln u1) cos(2 pi u2),  z1 = sqrt(-2 ln u1) sin(2 pi u2).
// Unlike std::normal_distribution the sequence is fixed across standard
// library implementations.
class GaussianNoise {
 public:
  explicit GaussianNoise(std::uint64_t seed) : engine_(seed) {}
  double Next();

 private:
  double Uniform();

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Pitch-synchronous overlap-add. Each pulse contributes a minimum-phase
// response of the envelope scaled by (1 - AP) plus envelope-shaped noise
// scaled by AP, both in power. Output has frames * frame_period samples.
// Throws kInconsistentFrames.
AudioClip Synthesize(const F0Track &f0, const SpectralEnvelope &envelope,
                     const Aperiodicity &aperiodicity,
                     const SynthesisOptions &options = {});

}  // namespace voxsan

#endif  // VOXSAN_VOCODER_SYNTHESIS_H_
