// include/voxsan/eval/speaker.h

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

#ifndef VOXSAN_EVAL_SPEAKER_H_
#define VOXSAN_EVAL_SPEAKER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "voxsan/features/mcep.h"
#include "voxsan/vocoder/f0.h"

namespace voxsan {

struct SpeakerEmbedding {
  std::vector<double> values;
  std::string speaker_id;
};

// Time-averaged c1..c_order over all frames followed by the mean and std of
// log-F0 over voiced frames (zeros when there are none). Not normalized.
SpeakerEmbedding RawSpeakerEmbedding(const F0Track &f0, const McepTrack &mcep,
                                     const std::string &speaker_id);

// Standardizes every dimension across the set (dimensions with no spread
// are only centred), then scales each vector to unit length. Vectors that
// end up all zero stay zero.
void NormalizeEmbeddings(std::vector<SpeakerEmbedding> &embeddings);

double CosineSimilarity(const std::vector<double> &a,
                        const std::vector<double> &b);

struct VerificationTrials {
  std::vector<double> genuine;
  std::vector<double> impostor;
};

// Every same-speaker pair is a genuine trial. Impostor trials are a seeded
// sample without replacement of the different-speaker pairs, as many as
// there are genuine trials (or all of them if fewer). Throws
// kInsufficientSpeakers unless two speakers have at least two clips each.
VerificationTrials SpeakerScores(const std::vector<SpeakerEmbedding> &embeddings,
                                 std::uint64_t seed);

}  // namespace voxsan

#endif  // VOXSAN_EVAL_SPEAKER_H_
