// include/voxsan/gan/trainer.h

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

#ifndef VOXSAN_GAN_TRAINER_H_
#define VOXSAN_GAN_TRAINER_H_

#include <functional>
#include <vector>

#include "voxsan/common/matrix.h"
#include "voxsan/gan/adam.h"
#include "voxsan/gan/gradients.h"
#include "voxsan/gan/model.h"
#include "voxsan/gan/train_config.h"

namespace voxsan::gan {

struct StepRecord {
  int epoch = 0;
  int step = 0;
  LossTerms losses;
};

// Stacks frames x dims matrices into an n x dims x frames batch.
Tensor<float> ToBatch(const std::vector<Matrix> &segments);
// Inverse of ToBatch for a single item.
Matrix FromBatch(const Tensor<float> &batch, int item);

class Trainer {
 public:
  using Observer = std::function<void(const StepRecord &)>;

  // Initializes the model from config.seed. Throws kInvalidArgument.
  Trainer(const ModelSpec &spec, const TrainConfig &config);

  // Runs config.epochs epochs (or until config.max_steps) over normalized
  // frames x dims tracks. Each epoch shuffles both domains, pairs them up
  // (the shorter list wraps around) and draws one segment_length crop per
  // track, reflect-padding short tracks. Throws kEmptyCorpus,
  // kShapeMismatch, kNonFiniteLoss; after kNonFiniteLoss the model holds
  // the last finite parameters.
  void Train(const std::vector<Matrix> &x, const std::vector<Matrix> &y,
             const Observer &observer = {});

  // One update of all four networks on the given batches.
  StepRecord Step(const Tensor<float> &x, const Tensor<float> &y, int epoch);

  const CycleGan<float> &model() const { return model_; }
  CycleGan<float> &model() { return model_; }
  const TrainConfig &config() const { return config_; }
  const std::vector<StepRecord> &history() const { return history_; }
  int epochs_completed() const { return epochs_completed_; }

 private:
  double IdentityWeight(int epoch) const;

  TrainConfig config_;
  CycleGan<float> model_;
  Adam<float> opt_g_, opt_f_, opt_dx_, opt_dy_;
  std::vector<StepRecord> history_;
  int epochs_completed_ = 0;
};

}  // namespace voxsan::gan

#endif  // VOXSAN_GAN_TRAINER_H_
