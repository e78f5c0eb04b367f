// include/voxsan/gan/gradients.h

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

#ifndef VOXSAN_GAN_GRADIENTS_H_
#define VOXSAN_GAN_GRADIENTS_H_

#include <vector>

#include "voxsan/gan/model.h"

namespace voxsan::gan {

struct LossTerms {
  double adversarial_g = 0.0;  // both directions, generator side
  double adversarial_d = 0.0;  // both discriminators
  double cycle = 0.0;          // |F(G(x)) - x| + |G(F(y)) - y|
  double identity = 0.0;       // |G(y) - y| + |F(x) - x|
  double full = 0.0;           // generator objective
};

// Gradients of the generator objective for G and F and of the
// discriminator objective for D_X and D_Y, all at the same parameters.
template <typename T>
struct Gradients {
  std::vector<T> g;
  std::vector<T> f;
  std::vector<T> dx;
  std::vector<T> dy;
  LossTerms losses;
};

// Forward pass only. Throws kShapeMismatch, kNonFiniteLoss.
template <typename T>
LossTerms EvaluateLosses(const CycleGan<T> &model, const Tensor<T> &x,
                         const Tensor<T> &y, double lambda_cyc,
                         double lambda_id);

template <typename T>
Gradients<T> ComputeGradients(const CycleGan<T> &model, const Tensor<T> &x,
                              const Tensor<T> &y, double lambda_cyc,
                              double lambda_id);

}  // namespace voxsan::gan

#endif  // VOXSAN_GAN_GRADIENTS_H_
