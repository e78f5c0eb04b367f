// src/eval/summary.cc

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

#include "voxsan/eval/summary.h"

#include <algorithm>
#include <cmath>

#include "voxsan/common/error.h"

namespace voxsan {

namespace {

struct Moments {
  double mean = 0.0;
  double std = 0.0;
};

Moments MeanStd(const std::vector<double> &v) {
  if (v.empty()) return {};
  double sum = 0.0;
  for (double x : v) sum += x;
  const double mean = sum / static_cast<double>(v.size());
  double sq = 0.0;
  for (double x : v) sq += (x - mean) * (x - mean);
  return {mean, std::sqrt(sq / static_cast<double>(v.size()))};
}

}  // namespace

std::size_t SummaryLength(int order) {
  return 4 + 2 * static_cast<std::size_t>(order + 1);
}

std::vector<std::string> SummaryFieldNames(int order) {
  std::vector<std::string> names = {"f0_mean", "f0_std", "f0_range",
                                    "f0_missing"};
  for (int d = 0; d <= order; ++d) {
    names.push_back("c" + std::to_string(d) + "_mean");
    names.push_back("c" + std::to_string(d) + "_std");
  }
  return names;
}

std::vector<double> SummarizeClip(const F0Track &f0, const McepTrack &mcep) {
  if (mcep.order() < 0)
    throw Error(ErrorCode::kInvalidArgument, "empty mcep track");
  std::vector<double> out;
  out.reserve(SummaryLength(mcep.order()));

  std::vector<double> voiced;
  for (double v : f0.values)
    if (v > 0.0) voiced.push_back(v);
  // Sorting makes the sums independent of frame order bit for bit.
  std::sort(voiced.begin(), voiced.end());
  const Moments m = MeanStd(voiced);
  out.push_back(m.mean);
  out.push_back(m.std);
  out.push_back(voiced.empty() ? 0.0 : voiced.back() - voiced.front());
  out.push_back(voiced.empty() ? 1.0 : 0.0);

  std::vector<double> column(mcep.frames());
  for (int d = 0; d <= mcep.order(); ++d) {
    for (std::size_t t = 0; t < mcep.frames(); ++t)
      column[t] = mcep.values(t, d);
    std::sort(column.begin(), column.end());
    const Moments c = MeanStd(column);
    out.push_back(c.mean);
    out.push_back(c.std);
  }
  return out;
}

std::vector<double> ExtractClipSummary(const VocoderFeatures &features,
                                       int order, double warp) {
  features.Validate();
  return SummarizeClip(features.f0,
                       EnvelopeToMcep(features.envelope, order, warp));
}

}  // namespace voxsan
