// src/features/f0_stats.cc

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

#include "voxsan/features/f0_stats.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "voxsan/common/error.h"

namespace voxsan {

LogF0Stats ComputeLogF0Stats(std::span<const F0Track *const> tracks) {
  LogF0Stats stats;
  double sum = 0.0;
  for (const F0Track *t : tracks)
    for (double v : t->values)
      if (v > 0.0) {
        sum += std::log(v);
        ++stats.voiced_frame_count;
      }
  if (stats.voiced_frame_count == 0)
    throw Error(ErrorCode::kNoVoicedFrames, "no voiced frames in F0 tracks");
  stats.mean = sum / stats.voiced_frame_count;
  double sq = 0.0;
  for (const F0Track *t : tracks)
    for (double v : t->values)
      if (v > 0.0) {
        const double d = std::log(v) - stats.mean;
        sq += d * d;
      }
  stats.std = std::sqrt(sq / stats.voiced_frame_count);
  return stats;
}

LogF0Stats ComputeLogF0Stats(std::span<const F0Track> tracks) {
  std::vector<const F0Track *> pointers;
  pointers.reserve(tracks.size());
  for (const F0Track &t : tracks) pointers.push_back(&t);
  return ComputeLogF0Stats(std::span<const F0Track *const>(pointers));
}

F0Track ConvertLogF0(const F0Track &f0, const LogF0Stats &src,
                     const LogF0Stats &tgt) {
  F0Track out = f0;
  const double scale = src.std > 0.0 ? tgt.std / src.std : 1.0;
  for (double &v : out.values) {
    if (v <= 0.0) continue;
    v = std::exp((std::log(v) - src.mean) * scale + tgt.mean);
    out.floor_hz = std::min(out.floor_hz, v);
    out.ceil_hz = std::max(out.ceil_hz, v);
  }
  return out;
}

}  // namespace voxsan
