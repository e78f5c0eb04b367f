// include/voxsan/common/parallel.h

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

#ifndef VOXSAN_COMMON_PARALLEL_H_
#define VOXSAN_COMMON_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace voxsan {

// Calls fn(i) for i in [0, n) on up to `threads` workers. Results must be
// written to per-index slots so the outcome does not depend on scheduling.
// The exception of the lowest failing index is rethrown after all workers
// finish.
template <typename Fn>
void ParallelFor(std::size_t n, int threads, Fn &&fn) {
  const std::size_t workers =
      std::min<std::size_t>(n, static_cast<std::size_t>(std::max(threads, 1)));
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto &t : pool) t.join();
  }
  for (const auto &e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace voxsan

#endif  // VOXSAN_COMMON_PARALLEL_H_
