// src/vocoder/vocoder.cc

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

#include "voxsan/vocoder/vocoder.h"

#include "voxsan/common/error.h"

namespace voxsan {

void VocoderFeatures::Validate() const {
  const std::size_t n = f0.size();
  if (envelope.frames() != n || aperiodicity.frames() != n)
    throw Error(ErrorCode::kInconsistentFrames,
                "f0/envelope/aperiodicity frame counts " + std::to_string(n) +
                    "/" + std::to_string(envelope.frames()) + "/" +
                    std::to_string(aperiodicity.frames()));
  if (aperiodicity.bins() != envelope.bins())
    throw Error(ErrorCode::kInconsistentFrames, "bin counts differ");
  if (envelope.sample_rate != sample_rate)
    throw Error(ErrorCode::kInconsistentFrames, "sample rates differ");
}

VocoderFeatures Analyze(const AudioClip &clip, const AnalysisConfig &config) {
  F0Options f0_options;
  f0_options.frame_period_ms = config.frame_period_ms;
  f0_options.floor_hz = config.f0_floor_hz;
  f0_options.ceil_hz = config.f0_ceil_hz;

  EnvelopeOptions envelope_options;
  envelope_options.fft_size = config.fft_size;
  envelope_options.default_f0 = config.unvoiced_envelope_f0;

  AperiodicityOptions ap_options;
  ap_options.fft_size = config.fft_size;
  ap_options.band_width_hz = config.aperiodicity_band_hz;

  VocoderFeatures features;
  features.sample_rate = clip.sample_rate;
  features.f0 = EstimateF0(clip, f0_options);
  features.envelope = EstimateEnvelope(clip, features.f0, envelope_options);
  features.aperiodicity =
      EstimateAperiodicity(clip, features.f0, ap_options);
  return features;
}

AudioClip Synthesize(const VocoderFeatures &features,
                     const SynthesisOptions &options) {
  features.Validate();
  return Synthesize(features.f0, features.envelope, features.aperiodicity,
                    options);
}

}  // namespace voxsan
