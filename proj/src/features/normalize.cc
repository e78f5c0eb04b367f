// src/features/normalize.cc

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

#include "voxsan/features/normalize.h"

#include <cmath>

#include "voxsan/common/error.h"

namespace voxsan {

namespace {

void CheckDims(const Matrix &track, const NormStats &stats) {
  if (track.cols() != stats.dims())
    throw Error(ErrorCode::kShapeMismatch,
                "track has " + std::to_string(track.cols()) +
                    " dims, stats have " + std::to_string(stats.dims()));
}

}  // namespace

NormStats FitNorm(std::span<const Matrix *const> tracks) {
  std::size_t rows = 0;
  std::size_t dims = tracks.empty() ? 0 : tracks.front()->cols();
  for (const Matrix *t : tracks) {
    if (t->cols() != dims)
      throw Error(ErrorCode::kShapeMismatch, "tracks differ in width");
    rows += t->rows();
  }
  if (rows < 2 || dims == 0)
    throw Error(ErrorCode::kEmptyInput, "need at least two frames");

  NormStats stats;
  stats.mean.assign(dims, 0.0);
  stats.std.assign(dims, 0.0);
  stats.flagged.assign(dims, false);
  for (const Matrix *t : tracks)
    for (std::size_t r = 0; r < t->rows(); ++r)
      for (std::size_t d = 0; d < dims; ++d) stats.mean[d] += (*t)(r, d);
  for (double &m : stats.mean) m /= rows;
  for (const Matrix *t : tracks)
    for (std::size_t r = 0; r < t->rows(); ++r)
      for (std::size_t d = 0; d < dims; ++d) {
        const double v = (*t)(r, d) - stats.mean[d];
        stats.std[d] += v * v;
      }
  for (std::size_t d = 0; d < dims; ++d) {
    stats.std[d] = std::sqrt(stats.std[d] / rows);
    if (stats.std[d] < kMinStd) {
      stats.std[d] = 1.0;
      stats.flagged[d] = true;
    }
  }
  return stats;
}

NormStats FitNorm(std::span<const Matrix> tracks) {
  std::vector<const Matrix *> pointers;
  for (const Matrix &t : tracks) pointers.push_back(&t);
  return FitNorm(std::span<const Matrix *const>(pointers));
}

Matrix ApplyNorm(const Matrix &track, const NormStats &stats) {
  CheckDims(track, stats);
  Matrix out = track;
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t d = 0; d < out.cols(); ++d)
      out(r, d) = (out(r, d) - stats.mean[d]) / stats.std[d];
  return out;
}

Matrix InvertNorm(const Matrix &track, const NormStats &stats) {
  CheckDims(track, stats);
  Matrix out = track;
  for (std::size_t r = 0; r < out.rows(); ++r)
    for (std::size_t d = 0; d < out.cols(); ++d)
      out(r, d) = out(r, d) * stats.std[d] + stats.mean[d];
  return out;
}

}  // namespace voxsan
