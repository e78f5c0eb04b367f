// include/voxsan/eval/summary.h

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

#ifndef VOXSAN_EVAL_SUMMARY_H_
#define VOXSAN_EVAL_SUMMARY_H_

#include <string>
#include <vector>

#include "voxsan/features/mcep.h"
#include "voxsan/vocoder/vocoder.h"

namespace voxsan {

// Per-clip statistics, in this order:
//   f0_mean, f0_std, f0_range (Hz, voiced frames only), f0_missing,
//   c0_mean, c0_std, then mean and std of every coefficient c1..c_order.
// Clips without voiced frames get zero F0 statistics and f0_missing = 1.
// Every statistic ignores frame order.
std::vector<double> SummarizeClip(const F0Track &f0, const McepTrack &mcep);
std::vector<double> ExtractClipSummary(const VocoderFeatures &features,
                                       int order = kDefaultMcepOrder,
                                       double warp = kDefaultWarp);

std::size_t SummaryLength(int order);
std::vector<std::string> SummaryFieldNames(int order);

}  // namespace voxsan

#endif  // VOXSAN_EVAL_SUMMARY_H_
