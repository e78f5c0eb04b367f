// src/gan/adam.cc

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

#include "voxsan/gan/adam.h"

#include <cmath>

#include "voxsan/common/error.h"

namespace voxsan::gan {

template <typename T>
Adam<T>::Adam(std::size_t size, double lr, double beta1, double beta2,
              double epsilon)
    : lr_(lr), beta1_(beta1), beta2_(beta2), epsilon_(epsilon),
      m_(size, T(0)), v_(size, T(0)) {}

template <typename T>
void Adam<T>::Step(std::span<T> params, std::span<const T> grads) {
  if (params.size() != m_.size() || grads.size() != m_.size())
    throw Error(ErrorCode::kShapeMismatch, "optimizer size mismatch");
  ++steps_;
  const double c1 = 1.0 - std::pow(beta1_, static_cast<double>(steps_));
  const double c2 = 1.0 - std::pow(beta2_, static_cast<double>(steps_));
  const T b1 = static_cast<T>(beta1_), b2 = static_cast<T>(beta2_);
  const T step = static_cast<T>(lr_ / c1);
  const T inv_c2 = static_cast<T>(1.0 / c2);
  const T eps = static_cast<T>(epsilon_);
  for (std::size_t i = 0; i < params.size(); ++i) {
    const T g = grads[i];
    m_[i] = b1 * m_[i] + (T(1) - b1) * g;
    v_[i] = b2 * v_[i] + (T(1) - b2) * g * g;
    params[i] -= step * m_[i] / (std::sqrt(v_[i] * inv_c2) + eps);
  }
}

template <typename T>
void Adam<T>::Restore(std::int64_t steps, std::vector<T> m, std::vector<T> v) {
  if (m.size() != m_.size() || v.size() != v_.size())
    throw Error(ErrorCode::kShapeMismatch, "optimizer state size mismatch");
  steps_ = steps;
  m_ = std::move(m);
  v_ = std::move(v);
}

template class Adam<float>;
template class Adam<double>;

}  // namespace voxsan::gan
