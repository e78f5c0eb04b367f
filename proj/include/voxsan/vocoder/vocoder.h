// include/voxsan/vocoder/vocoder.h

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

#ifndef VOXSAN_VOCODER_VOCODER_H_
#define VOXSAN_VOCODER_VOCODER_H_

#include "voxsan/corpus/audio.h"
#include "voxsan/vocoder/aperiodicity.h"
#include "voxsan/vocoder/envelope.h"
#include "voxsan/vocoder/f0.h"
#include "voxsan/vocoder/synthesis.h"

namespace voxsan {

struct AnalysisConfig {
  double frame_period_ms = 5.0;
  int fft_size = 1024;
  double f0_floor_hz = 70.0;
  double f0_ceil_hz = 500.0;
  double unvoiced_envelope_f0 = 160.0;
  double aperiodicity_band_hz = 2000.0;
};

struct VocoderFeatures {
  F0Track f0;
  SpectralEnvelope envelope;
  Aperiodicity aperiodicity;
  int sample_rate = 16000;

  std::size_t frames() const { return f0.size(); }
  // Throws kInconsistentFrames when the tracks disagree.
  void Validate() const;
};

VocoderFeatures Analyze(const AudioClip &clip,
                        const AnalysisConfig &config = {});

AudioClip Synthesize(const VocoderFeatures &features,
                     const SynthesisOptions &options = {});

}  // namespace voxsan

#endif  // VOXSAN_VOCODER_VOCODER_H_
