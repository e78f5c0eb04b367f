// include/voxsan/synth/synthetic_corpus.h

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

#ifndef VOXSAN_SYNTH_SYNTHETIC_CORPUS_H_
#define VOXSAN_SYNTH_SYNTHETIC_CORPUS_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "voxsan/corpus/audio.h"
#include "voxsan/corpus/labels.h"
#include "voxsan/corpus/manifest.h"

namespace voxsan {

using Formants = std::array<double, 3>;

// A voiced utterance built by additive synthesis: harmonics of a smooth F0
// contour, shaped by three second-order resonances that glide between the
// listed vowel targets, a -6 dB/octave source slope and an optional extra
// tilt relative to 1 kHz.
struct VoiceSpec {
  double f0_hz = 140.0;
  double f0_modulation = 0.08;  // relative depth of the slow F0 wobble
  std::vector<Formants> vowels = {{730, 1090, 2440}};
  double tilt_db_per_octave = 0.0;
  double duration_s = 1.0;
  double lead_silence_s = 0.08;  // on both ends
  double noise_level = 0.002;    // white noise floor, absolute
  double peak = 0.5;
  int sample_rate = 16000;
};

AudioClip SynthesizeVoice(const VoiceSpec &spec, std::uint64_t seed);

// Plain steady vowel: harmonics of a constant F0 through three formants.
AudioClip SteadyVowel(double f0_hz, const Formants &formants, double seconds,
                      int sample_rate = 16000);

struct SyntheticCorpusOptions {
  int speakers = 4;
  int clips_per_domain = 40;
  double duration_s = 1.0;
  int sample_rate = 16000;
  Emotion emotion = Emotion::kAngry;
  double f0_ratio = 2.0;  // emotional over neutral
  double tilt_db_per_octave = 6.0;
  std::uint64_t seed = 7;
};

struct SyntheticCorpus {
  Corpus emotional;
  Corpus neutral;
  std::string emotional_manifest;
  std::string neutral_manifest;
};

// Writes <dir>/<emotion>/spkK_NNN.wav and <dir>/neutral/spkK_NNN.wav plus
// the manifests <dir>/<emotion>.csv and <dir>/neutral.csv. Speakers are
// distinct formant templates and base F0s; clips cycle through speakers.
// The two domains share speakers, vowel orders and transcripts and differ
// only in F0 (times f0_ratio) and spectral tilt.
SyntheticCorpus WriteSyntheticCorpus(const std::string &dir,
                                     const SyntheticCorpusOptions &options = {});

}  // namespace voxsan

#endif  // VOXSAN_SYNTH_SYNTHETIC_CORPUS_H_
