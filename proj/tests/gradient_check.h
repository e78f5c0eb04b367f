// tests/gradient_check.h

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

#ifndef VOXSAN_TESTS_GRADIENT_CHECK_H_
#define VOXSAN_TESTS_GRADIENT_CHECK_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "voxsan/gan/gradients.h"

namespace voxsan::gan {

struct GradientCheckResult {
  double worst = 0.0;     // largest relative error
  std::size_t checked = 0;
  std::size_t refined = 0;  // parameters that needed a smaller step
};

// Signs of every residual inside the L1 cycle and identity terms. Central
// differences are only valid when these agree at both probe points.
inline std::vector<signed char> ResidualSigns(const CycleGan<double> &m,
                                              const Tensor<double> &x,
                                              const Tensor<double> &y) {
  std::vector<signed char> signs;
  auto add = [&](const Tensor<double> &a, const Tensor<double> &b) {
    for (std::size_t i = 0; i < a.v.size(); ++i)
      signs.push_back(static_cast<signed char>((a.v[i] > b.v[i]) - (a.v[i] < b.v[i])));
  };
  add(m.f.Forward(m.g.Forward(x)), x);
  add(m.g.Forward(m.f.Forward(y)), y);
  add(m.g.Forward(y), y);
  add(m.f.Forward(x), x);
  return signs;
}

// Compares analytic gradients of every parameter with central differences
// of step h. When a step crosses a kink of the L1 terms it is halved until
// it does not.
inline GradientCheckResult CheckGradients(CycleGan<double> &model, const Tensor<double> &x,
                                          const Tensor<double> &y, double lambda_cyc,
                                          double lambda_id, double h) {
  const auto grads = ComputeGradients(model, x, y, lambda_cyc, lambda_id);
  GradientCheckResult result;
  auto check = [&](std::vector<double> &params, const std::vector<double> &g,
                   bool discriminator) {
    for (std::size_t i = 0; i < params.size(); ++i) {
      const double saved = params[i];
      double step = h;
      LossTerms plus, minus;
      for (int halvings = 0;; ++halvings) {
        params[i] = saved + step;
        plus = EvaluateLosses(model, x, y, lambda_cyc, lambda_id);
        const auto signs_plus = discriminator ? std::vector<signed char>{}
                                              : ResidualSigns(model, x, y);
        params[i] = saved - step;
        minus = EvaluateLosses(model, x, y, lambda_cyc, lambda_id);
        const bool smooth = discriminator || signs_plus == ResidualSigns(model, x, y);
        if (smooth || halvings == 20) break;
        if (halvings == 0) ++result.refined;
        step /= 2;
      }
      params[i] = saved;
      const double numeric =
          discriminator ? (plus.adversarial_d - minus.adversarial_d) / (2 * step)
                        : (plus.full - minus.full) / (2 * step);
      const double rel = std::abs(numeric - g[i]) /
                         std::max({std::abs(numeric), std::abs(g[i]), 1e-6});
      result.worst = std::max(result.worst, rel);
      ++result.checked;
    }
  };
  check(model.g.params(), grads.g, false);
  check(model.f.params(), grads.f, false);
  check(model.dx.params(), grads.dx, true);
  check(model.dy.params(), grads.dy, true);
  return result;
}

}  // namespace voxsan::gan

#endif  // VOXSAN_TESTS_GRADIENT_CHECK_H_
