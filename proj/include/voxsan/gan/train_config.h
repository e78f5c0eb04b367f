// include/voxsan/gan/train_config.h

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

#ifndef VOXSAN_GAN_TRAIN_CONFIG_H_
#define VOXSAN_GAN_TRAIN_CONFIG_H_

#include <cstdint>
#include <string>

namespace voxsan::gan {

struct TrainConfig {
  double lambda_cyc = 10.0;
  double lambda_id = 5.0;
  // Epochs that use the identity term; -1 keeps it for the whole run.
  int identity_epochs = -1;
  double lr_generator = 2e-4;
  double lr_discriminator = 1e-4;
  // Learning rates fall linearly to zero over the steps after this
  // fraction of the planned run; 1 keeps them constant.
  double decay_start = 1.0;
  double beta1 = 0.5;
  double beta2 = 0.999;
  int batch_size = 1;
  int epochs = 1;
  int max_steps = 0;  // 0 means no cap
  std::uint64_t seed = 1;
  int segment_length = 128;
  std::string profile = "small";

  // Throws kInvalidArgument.
  void Validate() const;
  bool operator==(const TrainConfig &) const = default;
};

}  // namespace voxsan::gan

#endif  // VOXSAN_GAN_TRAIN_CONFIG_H_
