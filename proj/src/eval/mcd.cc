// src/eval/mcd.cc

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

#include "voxsan/eval/mcd.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "voxsan/common/error.h"

namespace voxsan {

double MelCepstralDistortion(const McepTrack &a, const McepTrack &b) {
  if (a.order() != b.order() || a.warp != b.warp)
    throw Error(ErrorCode::kOrderMismatch,
                "mcep tracks differ in order or warp");
  const std::size_t frames = std::min(a.frames(), b.frames());
  if (frames == 0) throw Error(ErrorCode::kEmptyInput, "empty mcep track");
  const std::size_t dims = a.values.cols();
  double total = 0.0;
  for (std::size_t t = 0; t < frames; ++t) {
    double sq = 0.0;
    for (std::size_t d = 1; d < dims; ++d) {
      const double diff = a.values(t, d) - b.values(t, d);
      sq += diff * diff;
    }
    total += std::sqrt(sq);
  }
  return 10.0 / std::numbers::ln10 * std::numbers::sqrt2 * total /
         static_cast<double>(frames);
}

}  // namespace voxsan
