// include/voxsan/gan/checkpoint.h

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

#ifndef VOXSAN_GAN_CHECKPOINT_H_
#define VOXSAN_GAN_CHECKPOINT_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "voxsan/features/mcep.h"
#include "voxsan/features/stats_io.h"
#include "voxsan/gan/model.h"
#include "voxsan/gan/train_config.h"
#include "voxsan/gan/trainer.h"

namespace voxsan::gan {

inline constexpr std::uint32_t kCheckpointVersion = 1;

// Everything conversion needs: the networks, how they were trained, and the
// normalization and log-F0 statistics of both domains (stats.source is X,
// stats.target is Y).
struct Checkpoint {
  ModelSpec spec;
  TrainConfig config;
  ConversionStats stats;
  std::string domain_x = "source";
  std::string domain_y = "target";
  int epoch = 0;
  double warp = kDefaultWarp;  // mcep order is spec.generator.dims - 1
  std::vector<StepRecord> history;
  CycleGan<float> model;
};

// Layout, little-endian:
//   "VXCK" u32 version | config block | stats block
//   u32 tensor count, each: string name, u32 rank, u32 dims[rank], f32 data
//   u32 history count, each: i32 epoch, i32 step, f64 x 5 losses
//   u32 CRC-32 of every preceding byte
std::vector<std::uint8_t> EncodeCheckpoint(const Checkpoint &ckpt);
// Throws kVersionMismatch, kCorruptCheckpoint (bad magic, truncation,
// checksum failure, tensor table not matching the recorded spec).
Checkpoint DecodeCheckpoint(std::span<const std::uint8_t> bytes);

void SaveCheckpoint(const Checkpoint &ckpt, const std::string &path);
Checkpoint LoadCheckpoint(const std::string &path);

// step,epoch,adversarial_g,adversarial_d,cycle,identity,full
std::string LossHistoryCsv(const std::vector<StepRecord> &history);

}  // namespace voxsan::gan

#endif  // VOXSAN_GAN_CHECKPOINT_H_
