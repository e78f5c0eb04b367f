// include/voxsan/gan/model.h

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

#ifndef VOXSAN_GAN_MODEL_H_
#define VOXSAN_GAN_MODEL_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "voxsan/gan/tensor.h"

namespace voxsan::gan {

struct GeneratorSpec {
  int dims = 25;
  int channels = 16;  // at full time resolution; doubles per downsampling
  int downsample = 2;
  int residual_blocks = 3;
  int kernel = 5;
  int max_channels = 256;
  // Adds the input to the decoder output so the network learns a
  // correction around the identity map.
  bool global_residual = true;
  // Initial weight scale of the output layer relative to the others.
  double output_init_scale = 1.0;

  int LevelChannels(int level) const;
  bool operator==(const GeneratorSpec &) const = default;
};

struct DiscriminatorSpec {
  int dims = 25;
  int channels = 16;
  int strided_layers = 3;
  int kernel = 5;
  int max_channels = 256;

  int LevelChannels(int level) const;
  int ScoreLength(int length) const;
  bool operator==(const DiscriminatorSpec &) const = default;
};

struct ModelSpec {
  GeneratorSpec generator;
  DiscriminatorSpec discriminator;
  int segment_length = 128;

  bool operator==(const ModelSpec &) const = default;
};

// "tiny" (gradient checks and toy runs), "small" (desk-scale pipeline) and
// "standard" (6 residual blocks, 64 channels). Throws kInvalidArgument.
ModelSpec ProfileSpec(const std::string &name, int dims);

// Inclusive range of output frames that can change when input `frame` of a
// `length`-frame segment changes.
std::pair<int, int> GeneratorInfluence(const GeneratorSpec &spec, int frame,
                                       int length);

template <typename T>
class Generator {
 public:
  struct Cache {
    std::vector<Tensor<T>> inputs;  // input of every conv, in order
    std::vector<Tensor<T>> pre;     // conv output before each GLU
  };

  Generator() = default;
  explicit Generator(const GeneratorSpec &spec);

  const GeneratorSpec &spec() const { return spec_; }
  const ParamLayout &layout() const { return layout_; }
  std::vector<T> &params() { return params_; }
  const std::vector<T> &params() const { return params_; }

  // Throws kShapeMismatch when dims or length do not fit the spec.
  Tensor<T> Forward(const Tensor<T> &x, Cache *cache = nullptr) const;
  // Accumulates parameter gradients into `grads` (sized like params) when
  // non-null; returns the input gradient.
  Tensor<T> Backward(const Cache &cache, const Tensor<T> &grad_out,
                     T *grads) const;

  void Initialize(std::uint64_t seed);

 private:
  struct Layer {
    ConvShape conv;
    std::size_t weight = 0;
    std::size_t bias = 0;
  };
  Layer AddLayer(const std::string &name, ConvShape conv);

  GeneratorSpec spec_;
  ParamLayout layout_;
  std::vector<T> params_;
  Layer in_;
  std::vector<Layer> down_;
  std::vector<Layer> res_gate_;
  std::vector<Layer> res_proj_;
  std::vector<Layer> up_;
  Layer out_;
};

template <typename T>
class Discriminator {
 public:
  struct Cache {
    std::vector<Tensor<T>> inputs;
    std::vector<Tensor<T>> pre;
  };

  Discriminator() = default;
  explicit Discriminator(const DiscriminatorSpec &spec);

  const DiscriminatorSpec &spec() const { return spec_; }
  const ParamLayout &layout() const { return layout_; }
  std::vector<T> &params() { return params_; }
  const std::vector<T> &params() const { return params_; }

  // Returns an n x 1 x ScoreLength(t) grid of scores.
  Tensor<T> Forward(const Tensor<T> &x, Cache *cache = nullptr) const;
  // `grads` may be null; the input gradient is produced only when
  // `want_input_grad` is set.
  Tensor<T> Backward(const Cache &cache, const Tensor<T> &grad_out, T *grads,
                     bool want_input_grad) const;

  void Initialize(std::uint64_t seed);

 private:
  struct Layer {
    ConvShape conv;
    std::size_t weight = 0;
    std::size_t bias = 0;
  };
  Layer AddLayer(const std::string &name, ConvShape conv);

  DiscriminatorSpec spec_;
  ParamLayout layout_;
  std::vector<T> params_;
  std::vector<Layer> gated_;
  Layer out_;
};

// G maps X to Y, F maps Y to X; D_X and D_Y judge each domain.
template <typename T>
struct CycleGan {
  ModelSpec spec;
  Generator<T> g;
  Generator<T> f;
  Discriminator<T> dx;
  Discriminator<T> dy;

  CycleGan() = default;
  explicit CycleGan(const ModelSpec &model_spec);
  void Initialize(std::uint64_t seed);
};

}  // namespace voxsan::gan

#endif  // VOXSAN_GAN_MODEL_H_
