// src/gan/gradients.cc

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

#include "voxsan/gan/gradients.h"

#include <cmath>

#include "voxsan/common/error.h"
#include "voxsan/gan/losses.h"

namespace voxsan::gan {

namespace {

template <typename T>
struct ForwardState {
  typename Generator<T>::Cache g_x, f_gx, f_y, g_fy, g_y, f_x;
  typename Discriminator<T>::Cache dy_fake, dx_fake, dy_real, dx_real;
  Tensor<T> gx, cyc_x, fy, cyc_y, id_y, id_x;
  Tensor<T> score_y_fake, score_x_fake, score_y_real, score_x_real;
  LossTerms losses;
};

template <typename T>
void RunForward(const CycleGan<T> &m, const Tensor<T> &x, const Tensor<T> &y,
                double lambda_cyc, double lambda_id, bool keep,
                ForwardState<T> &s) {
  if (!x.SameShape(y))
    throw Error(ErrorCode::kShapeMismatch, "X and Y batches differ in shape");
  s.gx = m.g.Forward(x, keep ? &s.g_x : nullptr);
  s.cyc_x = m.f.Forward(s.gx, keep ? &s.f_gx : nullptr);
  s.fy = m.f.Forward(y, keep ? &s.f_y : nullptr);
  s.cyc_y = m.g.Forward(s.fy, keep ? &s.g_fy : nullptr);
  s.id_y = m.g.Forward(y, keep ? &s.g_y : nullptr);
  s.id_x = m.f.Forward(x, keep ? &s.f_x : nullptr);
  s.score_y_fake = m.dy.Forward(s.gx, keep ? &s.dy_fake : nullptr);
  s.score_x_fake = m.dx.Forward(s.fy, keep ? &s.dx_fake : nullptr);
  s.score_y_real = m.dy.Forward(y, keep ? &s.dy_real : nullptr);
  s.score_x_real = m.dx.Forward(x, keep ? &s.dx_real : nullptr);

  auto adv_y = AdversarialLoss(s.score_y_real, s.score_y_fake);
  auto adv_x = AdversarialLoss(s.score_x_real, s.score_x_fake);
  LossTerms &l = s.losses;
  l.adversarial_g = adv_y.generator + adv_x.generator;
  l.adversarial_d = adv_y.discriminator + adv_x.discriminator;
  l.cycle = L1Loss(s.cyc_x, x) + L1Loss(s.cyc_y, y);
  l.identity = L1Loss(s.id_y, y) + L1Loss(s.id_x, x);
  l.full = FullLoss(l.adversarial_g, l.cycle, l.identity, lambda_cyc, lambda_id);
  if (!std::isfinite(l.full) || !std::isfinite(l.adversarial_d))
    throw Error(ErrorCode::kNonFiniteLoss, "loss is not finite");
}

}  // namespace

template <typename T>
LossTerms EvaluateLosses(const CycleGan<T> &model, const Tensor<T> &x,
                         const Tensor<T> &y, double lambda_cyc,
                         double lambda_id) {
  ForwardState<T> s;
  RunForward(model, x, y, lambda_cyc, lambda_id, false, s);
  return s.losses;
}

template <typename T>
Gradients<T> ComputeGradients(const CycleGan<T> &model, const Tensor<T> &x,
                              const Tensor<T> &y, double lambda_cyc,
                              double lambda_id) {
  ForwardState<T> s;
  RunForward(model, x, y, lambda_cyc, lambda_id, true, s);

  Gradients<T> out;
  out.losses = s.losses;
  out.g.assign(model.g.params().size(), T(0));
  out.f.assign(model.f.params().size(), T(0));
  out.dx.assign(model.dx.params().size(), T(0));
  out.dy.assign(model.dy.params().size(), T(0));

  // Generator objective. Discriminator parameters are held fixed here.
  Tensor<T> d_gx = model.dy.Backward(
      s.dy_fake, SquaredErrorGrad(s.score_y_fake, 1.0, 1.0), nullptr, true);
  Tensor<T> d_fy = model.dx.Backward(
      s.dx_fake, SquaredErrorGrad(s.score_x_fake, 1.0, 1.0), nullptr, true);
  if (lambda_cyc != 0.0) {
    AddInPlace(d_gx, model.f.Backward(s.f_gx, L1Grad(s.cyc_x, x, lambda_cyc),
                                      out.f.data()));
    AddInPlace(d_fy, model.g.Backward(s.g_fy, L1Grad(s.cyc_y, y, lambda_cyc),
                                      out.g.data()));
  }
  model.g.Backward(s.g_x, d_gx, out.g.data());
  model.f.Backward(s.f_y, d_fy, out.f.data());
  if (lambda_id != 0.0) {
    model.g.Backward(s.g_y, L1Grad(s.id_y, y, lambda_id), out.g.data());
    model.f.Backward(s.f_x, L1Grad(s.id_x, x, lambda_id), out.f.data());
  }

  // Discriminator objective; fakes are constants.
  model.dy.Backward(s.dy_real, SquaredErrorGrad(s.score_y_real, 1.0, 1.0),
                    out.dy.data(), false);
  model.dy.Backward(s.dy_fake, SquaredErrorGrad(s.score_y_fake, 0.0, 1.0),
                    out.dy.data(), false);
  model.dx.Backward(s.dx_real, SquaredErrorGrad(s.score_x_real, 1.0, 1.0),
                    out.dx.data(), false);
  model.dx.Backward(s.dx_fake, SquaredErrorGrad(s.score_x_fake, 0.0, 1.0),
                    out.dx.data(), false);
  return out;
}

template LossTerms EvaluateLosses(const CycleGan<float> &, const Tensor<float> &,
                                  const Tensor<float> &, double, double);
template LossTerms EvaluateLosses(const CycleGan<double> &,
                                  const Tensor<double> &,
                                  const Tensor<double> &, double, double);
template Gradients<float> ComputeGradients(const CycleGan<float> &,
                                           const Tensor<float> &,
                                           const Tensor<float> &, double,
                                           double);
template Gradients<double> ComputeGradients(const CycleGan<double> &,
                                            const Tensor<double> &,
                                            const Tensor<double> &, double,
                                            double);

}  // namespace voxsan::gan
