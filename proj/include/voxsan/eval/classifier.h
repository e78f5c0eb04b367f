// include/voxsan/eval/classifier.h

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

#ifndef VOXSAN_EVAL_CLASSIFIER_H_
#define VOXSAN_EVAL_CLASSIFIER_H_

#include <array>
#include <span>
#include <string>
#include <vector>

#include "voxsan/common/matrix.h"
#include "voxsan/corpus/labels.h"

namespace voxsan {

struct ClassifierOptions {
  double l2 = 1e-3;  // on every weight, biases included
  int max_iterations = 100;
  double tolerance = 1e-6;  // on the gradient norm
};

// Multinomial logistic regression over standardized clip summaries. Rows
// of `weights` are the eight emotion classes; the last column is the bias.
struct EmotionClassifier {
  std::vector<double> feature_mean;
  std::vector<double> feature_scale;
  Matrix weights;
  std::array<int, kNumEmotions> class_counts{};
  int iterations = 0;
  double gradient_norm = 0.0;
  // Identities of the training clips, when known.
  std::vector<std::string> training_keys;

  std::size_t dims() const { return feature_mean.size(); }
  // All-zero weights over `dims` features; predicts the uniform distribution.
  static EmotionClassifier Zero(std::size_t dims);
};

struct EmotionPrediction {
  Emotion label = Emotion::kNeutral;
  std::array<double, kNumEmotions> probabilities{};
};

// Newton's method with backtracking on mean cross-entropy plus
// (l2 / 2) * |W|^2. Throws kInsufficientData unless at least two classes
// have four or more clips each and no class has between one and three.
EmotionClassifier TrainEmotionClassifier(
    const std::vector<std::vector<double>> &summaries,
    const std::vector<Emotion> &labels, const ClassifierOptions &options = {});

// Throws kShapeMismatch when the summary length differs from training.
EmotionPrediction ClassifyEmotion(const EmotionClassifier &classifier,
                                  std::span<const double> summary);

}  // namespace voxsan

#endif  // VOXSAN_EVAL_CLASSIFIER_H_
