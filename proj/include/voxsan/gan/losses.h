// include/voxsan/gan/losses.h

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

#ifndef VOXSAN_GAN_LOSSES_H_
#define VOXSAN_GAN_LOSSES_H_

#include "voxsan/gan/tensor.h"

namespace voxsan::gan {

struct AdversarialTerms {
  double generator = 0.0;      // mean((fake - 1)^2)
  double discriminator = 0.0;  // mean((real - 1)^2) + mean(fake^2)
};

// Least-squares GAN terms. Throws kShapeMismatch.
template <typename T>
AdversarialTerms AdversarialLoss(const Tensor<T> &real_scores,
                                 const Tensor<T> &fake_scores);

// d/ds of mean((s - target)^2).
template <typename T>
Tensor<T> SquaredErrorGrad(const Tensor<T> &scores, double target,
                           double weight);

// Mean absolute difference. Throws kShapeMismatch.
template <typename T>
double L1Loss(const Tensor<T> &a, const Tensor<T> &b);

// d/da of weight * mean|a - b|, zero where a == b.
template <typename T>
Tensor<T> L1Grad(const Tensor<T> &a, const Tensor<T> &b, double weight);

// adv + lambda_cyc * cyc + lambda_id * id
double FullLoss(double adversarial, double cycle, double identity,
                double lambda_cyc, double lambda_id);

}  // namespace voxsan::gan

#endif  // VOXSAN_GAN_LOSSES_H_
