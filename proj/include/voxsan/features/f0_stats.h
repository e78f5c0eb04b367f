// include/voxsan/features/f0_stats.h

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

#ifndef VOXSAN_FEATURES_F0_STATS_H_
#define VOXSAN_FEATURES_F0_STATS_H_

#include <cstddef>
#include <span>

#include "voxsan/vocoder/f0.h"

namespace voxsan {

struct LogF0Stats {
  double mean = 0.0;
  double std = 0.0;
  std::size_t voiced_frame_count = 0;
};

// Population statistics of ln F0 over voiced frames, accumulated in track
// order. Throws kNoVoicedFrames.
LogF0Stats ComputeLogF0Stats(std::span<const F0Track> tracks);
LogF0Stats ComputeLogF0Stats(std::span<const F0Track *const> tracks);

// Log-Gaussian mapping of voiced frames; with src.std == 0 only the mean is
// shifted. Search bounds widen to cover the converted values.
F0Track ConvertLogF0(const F0Track &f0, const LogF0Stats &src,
                     const LogF0Stats &tgt);

}  // namespace voxsan

#endif  // VOXSAN_FEATURES_F0_STATS_H_
