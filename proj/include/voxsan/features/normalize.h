// include/voxsan/features/normalize.h

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

#ifndef VOXSAN_FEATURES_NORMALIZE_H_
#define VOXSAN_FEATURES_NORMALIZE_H_

#include <span>
#include <vector>

#include "voxsan/common/matrix.h"

namespace voxsan {

struct NormStats {
  std::vector<double> mean;
  std::vector<double> std;
  // Dimensions whose spread fell below kMinStd; their std is 1.
  std::vector<bool> flagged;

  std::size_t dims() const { return mean.size(); }
};

inline constexpr double kMinStd = 1e-10;

// Per-column population statistics over every row of every matrix.
// Throws kEmptyInput (fewer than two rows), kShapeMismatch.
NormStats FitNorm(std::span<const Matrix> tracks);
NormStats FitNorm(std::span<const Matrix *const> tracks);

Matrix ApplyNorm(const Matrix &track, const NormStats &stats);
Matrix InvertNorm(const Matrix &track, const NormStats &stats);

}  // namespace voxsan

#endif  // VOXSAN_FEATURES_NORMALIZE_H_
