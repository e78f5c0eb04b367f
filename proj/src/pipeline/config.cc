// src/pipeline/config.cc

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

#include "voxsan/pipeline/config.h"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "voxsan/common/error.h"
#include "voxsan/eval/transcription.h"

namespace voxsan {

namespace pt = boost::property_tree;

namespace {

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

template <typename T>
T Convert(const std::string &key, const std::string &value) {
  std::istringstream in(value);
  T out{};
  in >> out;
  if (in.fail() || !(in >> std::ws).eof())
    throw Error(ErrorCode::kBadConfig, "bad value for " + key + ": " + value);
  return out;
}

template <>
bool Convert<bool>(const std::string &key, const std::string &value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw Error(ErrorCode::kBadConfig, "bad boolean for " + key + ": " + value);
}

template <>
std::string Convert<std::string>(const std::string &, const std::string &value) {
  return value;
}

Direction ParseDirection(const std::string &key, const std::string &value) {
  if (value == "x2y") return Direction::kXToY;
  if (value == "y2x") return Direction::kYToX;
  throw Error(ErrorCode::kBadConfig, "bad direction for " + key + ": " + value);
}

// One table drives parsing and formatting so the two cannot drift apart.
struct Field {
  std::string section;
  std::string key;
  std::function<void(PipelineConfig &, const std::string &)> set;
  std::function<std::string(const PipelineConfig &)> get;
};

#define VOXSAN_FIELD(section, key, member, type, format)                      \
  Field {                                                                     \
    section, key,                                                             \
        [](PipelineConfig &c, const std::string &v) {                         \
          c.member = Convert<type>(std::string(section) + "." + key, v);       \
        },                                                                    \
        [](const PipelineConfig &c) { return format(c.member); }              \
  }

std::string Int(long long v) { return std::to_string(v); }
std::string Bool(bool v) { return v ? "true" : "false"; }
std::string Str(const std::string &v) { return v; }

const std::vector<Field> &Fields() {
  static const std::vector<Field> fields = {
      VOXSAN_FIELD("analysis", "frame_period_ms", analysis.frame_period_ms, double, Num),
      VOXSAN_FIELD("analysis", "fft_size", analysis.fft_size, int, Int),
      VOXSAN_FIELD("analysis", "f0_floor_hz", analysis.f0_floor_hz, double, Num),
      VOXSAN_FIELD("analysis", "f0_ceil_hz", analysis.f0_ceil_hz, double, Num),
      VOXSAN_FIELD("analysis", "unvoiced_envelope_f0", analysis.unvoiced_envelope_f0, double, Num),
      VOXSAN_FIELD("analysis", "aperiodicity_band_hz", analysis.aperiodicity_band_hz, double, Num),
      VOXSAN_FIELD("features", "mcep_order", features.mcep_order, int, Int),
      VOXSAN_FIELD("features", "warp", features.warp, double, Num),
      VOXSAN_FIELD("features", "normalization", features.normalization, std::string, Str),
      VOXSAN_FIELD("model", "profile", train.profile, std::string, Str),
      VOXSAN_FIELD("model", "channels", model.channels, int, Int),
      VOXSAN_FIELD("model", "downsample", model.downsample, int, Int),
      VOXSAN_FIELD("model", "residual_blocks", model.residual_blocks, int, Int),
      VOXSAN_FIELD("model", "kernel", model.kernel, int, Int),
      VOXSAN_FIELD("model", "disc_channels", model.disc_channels, int, Int),
      VOXSAN_FIELD("model", "disc_strided_layers", model.disc_strided_layers, int, Int),
      VOXSAN_FIELD("model", "segment_length", model.segment_length, int, Int),
      VOXSAN_FIELD("model", "output_init_scale", model.output_init_scale, double, Num),
      VOXSAN_FIELD("train", "lambda_cyc", train.lambda_cyc, double, Num),
      VOXSAN_FIELD("train", "lambda_id", train.lambda_id, double, Num),
      VOXSAN_FIELD("train", "identity_epochs", train.identity_epochs, int, Int),
      VOXSAN_FIELD("train", "lr_generator", train.lr_generator, double, Num),
      VOXSAN_FIELD("train", "lr_discriminator", train.lr_discriminator, double, Num),
      VOXSAN_FIELD("train", "decay_start", train.decay_start, double, Num),
      VOXSAN_FIELD("train", "beta1", train.beta1, double, Num),
      VOXSAN_FIELD("train", "beta2", train.beta2, double, Num),
      VOXSAN_FIELD("train", "batch_size", train.batch_size, int, Int),
      VOXSAN_FIELD("train", "epochs", train.epochs, int, Int),
      VOXSAN_FIELD("train", "max_steps", train.max_steps, int, Int),
      VOXSAN_FIELD("train", "seed", train.seed, std::uint64_t, Int),
      Field{"sanitize", "direction",
            [](PipelineConfig &c, const std::string &v) {
              c.sanitize.direction = ParseDirection("sanitize.direction", v);
            },
            [](const PipelineConfig &c) { return DirectionName(c.sanitize.direction); }},
      VOXSAN_FIELD("sanitize", "peak_normalize", sanitize.peak_normalize, bool, Bool),
      VOXSAN_FIELD("sanitize", "dump_features", sanitize.dump_features, bool, Bool),
      VOXSAN_FIELD("sanitize", "differential_envelope", sanitize.differential_envelope,
                   bool, Bool),
      VOXSAN_FIELD("sanitize", "synthesis_seed", sanitize.synthesis.seed, std::uint64_t, Int),
      VOXSAN_FIELD("evaluate", "train_fraction", evaluate.train_fraction, double, Num),
      VOXSAN_FIELD("evaluate", "seed", evaluate.seed, std::uint64_t, Int),
      VOXSAN_FIELD("evaluate", "language", evaluate.language, std::string, Str),
      VOXSAN_FIELD("evaluate", "provider", evaluate.provider, std::string, Str),
      VOXSAN_FIELD("evaluate", "provider_url", evaluate.provider_url, std::string, Str),
      VOXSAN_FIELD("evaluate", "cache_dir", evaluate.cache_dir, std::string, Str),
      VOXSAN_FIELD("evaluate", "timeout_seconds", evaluate.timeout_seconds, double, Num),
      VOXSAN_FIELD("runtime", "threads", threads, int, Int),
  };
  return fields;
}

#undef VOXSAN_FIELD

}  // namespace

std::string DirectionName(Direction d) {
  return d == Direction::kXToY ? "x2y" : "y2x";
}

gan::ModelSpec PipelineConfig::ModelSpecFor(int dims) const {
  gan::ModelSpec spec;
  try {
    spec = gan::ProfileSpec(train.profile, dims);
  } catch (const Error &e) {
    throw Error(ErrorCode::kBadConfig, e.what());
  }
  auto &g = spec.generator;
  auto &d = spec.discriminator;
  if (model.channels > 0) g.channels = model.channels;
  if (model.downsample >= 0) g.downsample = model.downsample;
  if (model.residual_blocks >= 0) g.residual_blocks = model.residual_blocks;
  if (model.kernel > 0) g.kernel = d.kernel = model.kernel;
  if (model.disc_channels > 0) d.channels = model.disc_channels;
  if (model.disc_strided_layers >= 0) d.strided_layers = model.disc_strided_layers;
  if (model.segment_length > 0) spec.segment_length = model.segment_length;
  if (model.output_init_scale >= 0.0) g.output_init_scale = model.output_init_scale;
  return spec;
}

void PipelineConfig::Resolve() {
  const gan::ModelSpec spec = ModelSpecFor(features.mcep_order + 1);
  const int unit = 1 << spec.generator.downsample;
  if (spec.segment_length % unit != 0)
    throw Error(ErrorCode::kBadConfig,
                "segment length must be a multiple of " + std::to_string(unit));
  train.segment_length = spec.segment_length;
  try {
    train.Validate();
  } catch (const Error &e) {
    throw Error(ErrorCode::kBadConfig, e.what());
  }
  if (features.mcep_order < 1 || !(features.warp > -1.0 && features.warp < 1.0))
    throw Error(ErrorCode::kBadConfig, "bad mcep order or warp");
  if (!(evaluate.train_fraction > 0.0 && evaluate.train_fraction < 1.0))
    throw Error(ErrorCode::kBadConfig, "evaluate.train_fraction must be in (0, 1)");
  if (evaluate.provider != "stub" && evaluate.provider != "http" &&
      evaluate.provider != "none")
    throw Error(ErrorCode::kBadConfig, "unknown provider " + evaluate.provider);
  if (features.normalization != "domain" && features.normalization != "shared")
    throw Error(ErrorCode::kBadConfig, "unknown normalization " + features.normalization);
  if (threads < 1) throw Error(ErrorCode::kBadConfig, "threads must be >= 1");
}

PipelineConfig ParseConfig(const std::string &text) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error &e) {
    throw Error(ErrorCode::kBadConfig, e.what());
  }
  std::map<std::string, const Field *> index;
  for (const Field &f : Fields()) index[f.section + "." + f.key] = &f;
  PipelineConfig config;
  for (const auto &[section, body] : tree) {
    if (body.empty())
      throw Error(ErrorCode::kBadConfig, "key outside a section: " + section);
    for (const auto &[key, value] : body) {
      const auto it = index.find(section + "." + key);
      if (it == index.end())
        throw Error(ErrorCode::kBadConfig, "unknown key " + section + "." + key);
      it->second->set(config, value.data());
    }
  }
  config.Resolve();
  return config;
}

PipelineConfig LoadConfig(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot read config " + path);
  std::stringstream text;
  text << in.rdbuf();
  return ParseConfig(text.str());
}

std::string FormatConfig(const PipelineConfig &config) {
  std::string out, section;
  for (const Field &f : Fields()) {
    if (f.section != section) {
      if (!section.empty()) out += "\n";
      section = f.section;
      out += "[" + section + "]\n";
    }
    out += f.key + " = " + f.get(config) + "\n";
  }
  return out;
}

std::string ConfigFingerprint(const PipelineConfig &config) {
  const std::string text = FormatConfig(config);
  return Sha256Hex({reinterpret_cast<const std::uint8_t *>(text.data()), text.size()});
}

}  // namespace voxsan
