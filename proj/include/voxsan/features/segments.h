// include/voxsan/features/segments.h

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

#ifndef VOXSAN_FEATURES_SEGMENTS_H_
#define VOXSAN_FEATURES_SEGMENTS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "voxsan/common/matrix.h"

namespace voxsan {

inline constexpr int kDefaultSegmentLength = 128;

struct Segment {
  Matrix frames;  // length x dims
  std::string clip_id;
  std::size_t start = 0;
};

// Mirror index into [0, n) without repeating the edge sample, bouncing
// as often as needed.
std::size_t ReflectIndex(long i, std::size_t n);

// Rows [start, start + length) of track with reflect padding past the end.
Matrix Window(const Matrix &track, std::size_t start, std::size_t length);

// Tracks shorter than `length` give one reflect-padded segment; longer
// tracks give `count` crops at offsets drawn from a Mersenne Twister
// seeded with `seed`. Throws kInvalidArgument for length < 1.
std::vector<Segment> MakeSegments(const Matrix &track, int length,
                                  std::uint64_t seed,
                                  const std::string &clip_id = {},
                                  int count = 1);

}  // namespace voxsan

#endif  // VOXSAN_FEATURES_SEGMENTS_H_
