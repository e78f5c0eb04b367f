// src/gan/losses.cc

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

#include "voxsan/gan/losses.h"

#include <cmath>

#include "voxsan/common/error.h"

namespace voxsan::gan {

namespace {

template <typename T>
void RequireSameShape(const Tensor<T> &a, const Tensor<T> &b) {
  if (!a.SameShape(b) || a.size() == 0)
    throw Error(ErrorCode::kShapeMismatch, "loss operands differ in shape");
}

template <typename T>
double MeanSquared(const Tensor<T> &s, double target) {
  double acc = 0.0;
  for (T v : s.v) {
    const double d = static_cast<double>(v) - target;
    acc += d * d;
  }
  return acc / static_cast<double>(s.size());
}

}  // namespace

template <typename T>
AdversarialTerms AdversarialLoss(const Tensor<T> &real_scores,
                                 const Tensor<T> &fake_scores) {
  RequireSameShape(real_scores, fake_scores);
  AdversarialTerms terms;
  terms.generator = MeanSquared(fake_scores, 1.0);
  terms.discriminator = MeanSquared(real_scores, 1.0) + MeanSquared(fake_scores, 0.0);
  return terms;
}

template <typename T>
Tensor<T> SquaredErrorGrad(const Tensor<T> &scores, double target,
                           double weight) {
  Tensor<T> g(scores.n, scores.c, scores.t);
  const double scale = 2.0 * weight / static_cast<double>(scores.size());
  for (std::size_t i = 0; i < g.v.size(); ++i)
    g.v[i] = static_cast<T>(scale * (static_cast<double>(scores.v[i]) - target));
  return g;
}

template <typename T>
double L1Loss(const Tensor<T> &a, const Tensor<T> &b) {
  RequireSameShape(a, b);
  double acc = 0.0;
  for (std::size_t i = 0; i < a.v.size(); ++i)
    acc += std::abs(static_cast<double>(a.v[i]) - static_cast<double>(b.v[i]));
  return acc / static_cast<double>(a.size());
}

template <typename T>
Tensor<T> L1Grad(const Tensor<T> &a, const Tensor<T> &b, double weight) {
  RequireSameShape(a, b);
  Tensor<T> g(a.n, a.c, a.t);
  const T step = static_cast<T>(weight / static_cast<double>(a.size()));
  for (std::size_t i = 0; i < g.v.size(); ++i)
    g.v[i] = a.v[i] > b.v[i] ? step : (a.v[i] < b.v[i] ? -step : T(0));
  return g;
}

double FullLoss(double adversarial, double cycle, double identity,
                double lambda_cyc, double lambda_id) {
  return adversarial + lambda_cyc * cycle + lambda_id * identity;
}

#define VOXSAN_INSTANTIATE(T)                                                 \
  template AdversarialTerms AdversarialLoss(const Tensor<T> &,               \
                                            const Tensor<T> &);              \
  template Tensor<T> SquaredErrorGrad(const Tensor<T> &, double, double);    \
  template double L1Loss(const Tensor<T> &, const Tensor<T> &);              \
  template Tensor<T> L1Grad(const Tensor<T> &, const Tensor<T> &, double);

VOXSAN_INSTANTIATE(float)
VOXSAN_INSTANTIATE(double)
#undef VOXSAN_INSTANTIATE

}  // namespace voxsan::gan
