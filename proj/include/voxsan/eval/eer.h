// include/voxsan/eval/eer.h

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

#ifndef VOXSAN_EVAL_EER_H_
#define VOXSAN_EVAL_EER_H_

#include <span>

namespace voxsan {

// Equal error rate of a verification system that accepts scores >= a
// threshold. The threshold sweeps every distinct score; between the last
// operating point with false-accept > false-reject and the first with
// false-accept <= false-reject the rates are interpolated linearly.
// Throws kEmptyScores.
double EqualErrorRate(std::span<const double> genuine,
                      std::span<const double> impostor);

}  // namespace voxsan

#endif  // VOXSAN_EVAL_EER_H_
