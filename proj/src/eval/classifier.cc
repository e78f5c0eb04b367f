// src/eval/classifier.cc

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

#include "voxsan/eval/classifier.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "voxsan/common/error.h"

namespace voxsan {

namespace {

constexpr int K = kNumEmotions;

// Probabilities for every row of the design matrix (bias column included).
Eigen::MatrixXd Softmax(const Eigen::MatrixXd &design,
                        const Eigen::MatrixXd &weights) {
  Eigen::MatrixXd logits = design * weights.transpose();
  for (Eigen::Index n = 0; n < logits.rows(); ++n) {
    const double top = logits.row(n).maxCoeff();
    logits.row(n) = (logits.row(n).array() - top).exp();
    logits.row(n) /= logits.row(n).sum();
  }
  return logits;
}

double Objective(const Eigen::MatrixXd &design, const Eigen::MatrixXd &onehot,
                 const Eigen::MatrixXd &weights, double l2) {
  const Eigen::MatrixXd logits = design * weights.transpose();
  double nll = 0.0;
  for (Eigen::Index n = 0; n < logits.rows(); ++n) {
    const double top = logits.row(n).maxCoeff();
    const double lse =
        top + std::log((logits.row(n).array() - top).exp().sum());
    nll += lse - (logits.row(n).array() * onehot.row(n).array()).sum();
  }
  return nll / static_cast<double>(design.rows()) +
         0.5 * l2 * weights.squaredNorm();
}

}  // namespace

EmotionClassifier EmotionClassifier::Zero(std::size_t dims) {
  EmotionClassifier c;
  c.feature_mean.assign(dims, 0.0);
  c.feature_scale.assign(dims, 1.0);
  c.weights = Matrix(K, dims + 1);
  return c;
}

EmotionClassifier TrainEmotionClassifier(
    const std::vector<std::vector<double>> &summaries,
    const std::vector<Emotion> &labels, const ClassifierOptions &options) {
  if (summaries.size() != labels.size() || summaries.empty())
    throw Error(ErrorCode::kInsufficientData,
                "classifier needs one label per summary");
  EmotionClassifier clf;
  for (Emotion e : labels) ++clf.class_counts[static_cast<int>(e)];
  int present = 0;
  for (int count : clf.class_counts) {
    if (count > 0 && count < 4)
      throw Error(ErrorCode::kInsufficientData,
                  "every present class needs at least 4 clips");
    if (count > 0) ++present;
  }
  if (present < 2)
    throw Error(ErrorCode::kInsufficientData,
                "classifier needs at least two classes");

  const std::size_t dims = summaries.front().size();
  const std::size_t n = summaries.size();
  for (const auto &s : summaries)
    if (s.size() != dims)
      throw Error(ErrorCode::kShapeMismatch, "summary lengths differ");

  clf.feature_mean.assign(dims, 0.0);
  clf.feature_scale.assign(dims, 1.0);
  for (std::size_t d = 0; d < dims; ++d) {
    double sum = 0.0;
    for (const auto &s : summaries) sum += s[d];
    const double mean = sum / static_cast<double>(n);
    double sq = 0.0;
    for (const auto &s : summaries) sq += (s[d] - mean) * (s[d] - mean);
    const double sd = std::sqrt(sq / static_cast<double>(n));
    clf.feature_mean[d] = mean;
    clf.feature_scale[d] = sd > 1e-12 ? sd : 1.0;
  }

  const Eigen::Index p = static_cast<Eigen::Index>(dims) + 1;
  Eigen::MatrixXd design(n, p);
  Eigen::MatrixXd onehot = Eigen::MatrixXd::Zero(n, K);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t d = 0; d < dims; ++d)
      design(i, d) = (summaries[i][d] - clf.feature_mean[d]) /
                     clf.feature_scale[d];
    design(i, p - 1) = 1.0;
    onehot(i, static_cast<int>(labels[i])) = 1.0;
  }

  // Parameters are flattened class-major: index k * p + j.
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(K, p);
  const double inv_n = 1.0 / static_cast<double>(n);
  double objective = Objective(design, onehot, w, options.l2);
  for (int iter = 0; iter < options.max_iterations; ++iter) {
    const Eigen::MatrixXd probs = Softmax(design, w);
    const Eigen::MatrixXd grad_w =
        (probs - onehot).transpose() * design * inv_n + options.l2 * w;
    Eigen::VectorXd grad(K * p);
    for (int k = 0; k < K; ++k) grad.segment(k * p, p) = grad_w.row(k);
    clf.gradient_norm = grad.norm();
    clf.iterations = iter;
    if (clf.gradient_norm < options.tolerance) break;

    Eigen::MatrixXd hessian = Eigen::MatrixXd::Zero(K * p, K * p);
    for (std::size_t i = 0; i < n; ++i) {
      const Eigen::RowVectorXd x = design.row(i);
      const Eigen::MatrixXd xx = x.transpose() * x * inv_n;
      for (int a = 0; a < K; ++a) {
        for (int b = a; b < K; ++b) {
          const double c = (a == b ? probs(i, a) : 0.0) - probs(i, a) * probs(i, b);
          if (c == 0.0) continue;
          hessian.block(a * p, b * p, p, p) += c * xx;
        }
      }
    }
    for (int a = 0; a < K; ++a)
      for (int b = a + 1; b < K; ++b)
        hessian.block(b * p, a * p, p, p) =
            hessian.block(a * p, b * p, p, p).transpose();
    hessian.diagonal().array() += options.l2;
    const Eigen::VectorXd step = hessian.ldlt().solve(grad);

    double t = 1.0;
    Eigen::MatrixXd next;
    double next_objective = objective;
    for (int tries = 0; tries < 40; ++tries) {
      next = w;
      for (int k = 0; k < K; ++k)
        next.row(k) -= t * step.segment(k * p, p).transpose();
      next_objective = Objective(design, onehot, next, options.l2);
      if (next_objective <= objective - 1e-4 * t * grad.dot(step)) break;
      t *= 0.5;
    }
    if (!(next_objective < objective)) break;
    w = next;
    objective = next_objective;
    clf.iterations = iter + 1;
  }

  clf.weights = Matrix(K, static_cast<std::size_t>(p));
  for (int k = 0; k < K; ++k)
    for (Eigen::Index j = 0; j < p; ++j) clf.weights(k, j) = w(k, j);
  return clf;
}

EmotionPrediction ClassifyEmotion(const EmotionClassifier &classifier,
                                  std::span<const double> summary) {
  const std::size_t dims = classifier.dims();
  if (summary.size() != dims || classifier.weights.cols() != dims + 1)
    throw Error(ErrorCode::kShapeMismatch,
                "summary length does not match the classifier");
  std::array<double, K> logits{};
  for (int k = 0; k < K; ++k) {
    double z = classifier.weights(k, dims);
    for (std::size_t d = 0; d < dims; ++d)
      z += classifier.weights(k, d) *
           (summary[d] - classifier.feature_mean[d]) /
           classifier.feature_scale[d];
    logits[k] = z;
  }
  const double top = *std::max_element(logits.begin(), logits.end());
  EmotionPrediction out;
  double total = 0.0;
  for (int k = 0; k < K; ++k) {
    out.probabilities[k] = std::exp(logits[k] - top);
    total += out.probabilities[k];
  }
  int best = 0;
  for (int k = 0; k < K; ++k) {
    out.probabilities[k] /= total;
    if (out.probabilities[k] > out.probabilities[best]) best = k;
  }
  out.label = static_cast<Emotion>(best);
  return out;
}

}  // namespace voxsan
