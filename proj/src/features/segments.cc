// src/features/segments.cc

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

#include "voxsan/features/segments.h"

#include <random>

#include "voxsan/common/error.h"

namespace voxsan {

std::size_t ReflectIndex(long i, std::size_t n) {
  if (n <= 1) return 0;
  const long period = 2 * static_cast<long>(n - 1);
  long m = i % period;
  if (m < 0) m += period;
  return static_cast<std::size_t>(m < static_cast<long>(n) ? m : period - m);
}

Matrix Window(const Matrix &track, std::size_t start, std::size_t length) {
  if (track.rows() == 0)
    throw Error(ErrorCode::kEmptyInput, "cannot window an empty track");
  Matrix out(length, track.cols());
  for (std::size_t r = 0; r < length; ++r) {
    auto src = track.row(ReflectIndex(static_cast<long>(start + r), track.rows()));
    auto dst = out.row(r);
    std::copy(src.begin(), src.end(), dst.begin());
  }
  return out;
}

std::vector<Segment> MakeSegments(const Matrix &track, int length,
                                  std::uint64_t seed,
                                  const std::string &clip_id, int count) {
  if (length < 1)
    throw Error(ErrorCode::kInvalidArgument, "segment length must be >= 1");
  const std::size_t len = static_cast<std::size_t>(length);
  std::vector<Segment> out;
  if (track.rows() <= len) {
    out.push_back({Window(track, 0, len), clip_id, 0});
    return out;
  }
  std::mt19937_64 engine(seed);
  const std::uint64_t choices = track.rows() - len + 1;
  for (int i = 0; i < count; ++i) {
    const std::size_t start = static_cast<std::size_t>(engine() % choices);
    out.push_back({Window(track, start, len), clip_id, start});
  }
  return out;
}

}  // namespace voxsan
