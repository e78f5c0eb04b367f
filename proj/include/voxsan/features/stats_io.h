// include/voxsan/features/stats_io.h

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

#ifndef VOXSAN_FEATURES_STATS_IO_H_
#define VOXSAN_FEATURES_STATS_IO_H_

#include <string>

#include "voxsan/features/f0_stats.h"
#include "voxsan/features/normalize.h"

namespace voxsan {

inline constexpr int kStatsFileVersion = 1;

// Statistics of one conversion domain.
struct DomainStats {
  NormStats norm;
  LogF0Stats logf0;
};

struct ConversionStats {
  DomainStats source;
  DomainStats target;
};

// Plain text, one "key = value" per line under a "voxsan-stats <version>"
// header. Doubles are written with 17 significant digits so a round trip
// is exact.
std::string FormatStats(const ConversionStats &stats);
// Throws kCorruptHeader, kVersionMismatch, kBadConfig (missing or
// malformed keys).
ConversionStats ParseStats(const std::string &text);

void WriteStats(const ConversionStats &stats, const std::string &path);
ConversionStats ReadStats(const std::string &path);

}  // namespace voxsan

#endif  // VOXSAN_FEATURES_STATS_IO_H_
