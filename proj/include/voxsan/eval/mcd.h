// include/voxsan/eval/mcd.h

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

#ifndef VOXSAN_EVAL_MCD_H_
#define VOXSAN_EVAL_MCD_H_

#include "voxsan/features/mcep.h"

namespace voxsan {

// Mel-cepstral distortion in dB:
//   (10 / ln 10) * sqrt(2) * mean_t || a_t[1..] - b_t[1..] ||_2
// over the first min(frames) frames; c0 (energy) is excluded. Throws
// kOrderMismatch when order or warp differ and kEmptyInput when either
// track has no frames.
double MelCepstralDistortion(const McepTrack &a, const McepTrack &b);

}  // namespace voxsan

#endif  // VOXSAN_EVAL_MCD_H_
