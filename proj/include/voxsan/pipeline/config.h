// include/voxsan/pipeline/config.h

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

#ifndef VOXSAN_PIPELINE_CONFIG_H_
#define VOXSAN_PIPELINE_CONFIG_H_

#include <cstdint>
#include <string>

#include "voxsan/features/mcep.h"
#include "voxsan/gan/model.h"
#include "voxsan/gan/train_config.h"
#include "voxsan/vocoder/synthesis.h"
#include "voxsan/vocoder/vocoder.h"

namespace voxsan {

enum class Direction { kXToY, kYToX };

struct FeatureConfig {
  int mcep_order = kDefaultMcepOrder;
  double warp = kDefaultWarp;
  // "domain" fits mcep statistics per domain; "shared" fits one set on both
  // domains so that mean and scale differences are left to the generator.
  std::string normalization = "domain";
};

// Architecture overrides on top of the named profile; 0 or negative keeps
// the profile value.
struct ModelOverrides {
  int channels = 0;
  int downsample = -1;
  int residual_blocks = -1;
  int kernel = 0;
  int disc_channels = 0;
  int disc_strided_layers = -1;
  int segment_length = 0;
  double output_init_scale = -1.0;
};

struct SanitizeOptions {
  Direction direction = Direction::kXToY;
  bool peak_normalize = false;
  bool dump_features = false;
  bool differential_envelope = true;
  SynthesisOptions synthesis;
};

struct EvaluateConfig {
  double train_fraction = 0.5;
  std::uint64_t seed = 1;
  std::string language = "en-US";
  std::string provider = "stub";  // stub, http or none
  std::string provider_url;
  std::string cache_dir;
  double timeout_seconds = 30.0;
};

struct PipelineConfig {
  AnalysisConfig analysis;
  FeatureConfig features;
  ModelOverrides model;
  gan::TrainConfig train;
  SanitizeOptions sanitize;
  EvaluateConfig evaluate;
  int threads = 1;

  // Profile named by train.profile with the overrides applied; the segment
  // length is copied into train.segment_length by Resolve().
  gan::ModelSpec ModelSpecFor(int dims) const;
  // Fills train.segment_length from the model spec and validates.
  // Throws kBadConfig.
  void Resolve();
};

// INI text with sections [analysis], [features], [model], [train],
// [sanitize], [evaluate] and [runtime]. Unknown sections or keys and
// unparsable values raise kBadConfig.
PipelineConfig ParseConfig(const std::string &text);
PipelineConfig LoadConfig(const std::string &path);
// Canonical INI listing every key; parsing it gives back the same config.
std::string FormatConfig(const PipelineConfig &config);
// SHA-256 of FormatConfig.
std::string ConfigFingerprint(const PipelineConfig &config);

std::string DirectionName(Direction d);

}  // namespace voxsan

#endif  // VOXSAN_PIPELINE_CONFIG_H_
