// include/voxsan/gan/adam.h

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

#ifndef VOXSAN_GAN_ADAM_H_
#define VOXSAN_GAN_ADAM_H_

#include <cstdint>
#include <span>
#include <vector>

namespace voxsan::gan {

// Adaptive moment estimation with bias correction.
template <typename T>
class Adam {
 public:
  Adam() = default;
  Adam(std::size_t size, double lr, double beta1, double beta2,
       double epsilon = 1e-8);

  void Step(std::span<T> params, std::span<const T> grads);

  void set_lr(double lr) { lr_ = lr; }
  double lr() const { return lr_; }
  std::int64_t steps() const { return steps_; }
  const std::vector<T> &first_moment() const { return m_; }
  const std::vector<T> &second_moment() const { return v_; }
  // Restores optimizer state saved alongside a checkpoint.
  void Restore(std::int64_t steps, std::vector<T> m, std::vector<T> v);

 private:
  double lr_ = 1e-3;
  double beta1_ = 0.9;
  double beta2_ = 0.999;
  double epsilon_ = 1e-8;
  std::int64_t steps_ = 0;
  std::vector<T> m_;
  std::vector<T> v_;
};

}  // namespace voxsan::gan

#endif  // VOXSAN_GAN_ADAM_H_
