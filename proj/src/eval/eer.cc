// src/eval/eer.cc

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

#include "voxsan/eval/eer.h"

#include <algorithm>
#include <vector>

#include "voxsan/common/error.h"

namespace voxsan {

double EqualErrorRate(std::span<const double> genuine,
                      std::span<const double> impostor) {
  if (genuine.empty() || impostor.empty())
    throw Error(ErrorCode::kEmptyScores, "EER needs genuine and impostor scores");
  std::vector<double> g(genuine.begin(), genuine.end());
  std::vector<double> i(impostor.begin(), impostor.end());
  std::sort(g.begin(), g.end());
  std::sort(i.begin(), i.end());
  std::vector<double> thresholds = g;
  thresholds.insert(thresholds.end(), i.begin(), i.end());
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  const double ng = static_cast<double>(g.size());
  const double ni = static_cast<double>(i.size());
  // Threshold below every score: everything accepted.
  double prev_far = 1.0, prev_frr = 0.0;
  auto rates_at = [&](double t, double &far, double &frr) {
    frr = static_cast<double>(std::lower_bound(g.begin(), g.end(), t) -
                              g.begin()) / ng;
    far = static_cast<double>(i.end() -
                              std::lower_bound(i.begin(), i.end(), t)) / ni;
  };
  for (std::size_t k = 0; k <= thresholds.size(); ++k) {
    double far = 0.0, frr = 1.0;  // above every score: everything rejected
    if (k < thresholds.size()) rates_at(thresholds[k], far, frr);
    if (far <= frr) {
      const double before = prev_far - prev_frr;
      const double after = far - frr;
      if (after == 0.0 || before == after) return far;
      const double alpha = before / (before - after);
      return prev_far + alpha * (far - prev_far);
    }
    prev_far = far;
    prev_frr = frr;
  }
  return 0.0;
}

}  // namespace voxsan
