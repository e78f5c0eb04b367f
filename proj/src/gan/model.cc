// src/gan/model.cc

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

#include "voxsan/gan/model.h"

#include <algorithm>
#include <cmath>

#include "voxsan/common/error.h"
#include "voxsan/vocoder/synthesis.h"

namespace voxsan::gan {

int GeneratorSpec::LevelChannels(int level) const {
  return std::min(max_channels, channels << level);
}

int DiscriminatorSpec::LevelChannels(int level) const {
  return std::min(max_channels, channels << level);
}

int DiscriminatorSpec::ScoreLength(int length) const {
  for (int i = 0; i < strided_layers; ++i)
    length = ConvShape{1, 1, kernel, 2}.OutLength(length);
  return ConvShape{1, 1, kernel, 1}.OutLength(length);
}

ModelSpec ProfileSpec(const std::string &name, int dims) {
  ModelSpec spec;
  auto &g = spec.generator;
  auto &d = spec.discriminator;
  if (name == "tiny") {
    g = {dims, 4, 1, 1, 3, 256, true, 1.0};
    d = {dims, 4, 1, 3, 256};
    spec.segment_length = 16;
  } else if (name == "small") {
    g = {dims, 16, 2, 2, 5, 256, true, 0.1};
    d = {dims, 16, 2, 5, 256};
    spec.segment_length = 64;
  } else if (name == "standard") {
    g = {dims, 64, 2, 6, 5, 256, true, 0.1};
    d = {dims, 64, 4, 5, 512};
    spec.segment_length = 128;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown model profile " + name);
  }
  return spec;
}

std::pair<int, int> GeneratorInfluence(const GeneratorSpec &spec, int frame,
                                       int length) {
  int lo = frame, hi = frame, len = length;
  auto conv = [&](int kernel, int stride) {
    const int pad = kernel / 2;
    const int out_len = ConvShape{1, 1, kernel, stride}.OutLength(len);
    // output tau reads inputs [tau*stride - pad, tau*stride - pad + kernel - 1]
    int new_lo = lo + pad - kernel + 1;
    new_lo = new_lo <= 0 ? 0 : (new_lo + stride - 1) / stride;
    int new_hi = std::min(out_len - 1, (hi + pad) / stride);
    lo = new_lo;
    hi = new_hi;
    len = out_len;
  };
  conv(spec.kernel, 1);
  for (int i = 0; i < spec.downsample; ++i) conv(spec.kernel, 2);
  for (int j = 0; j < spec.residual_blocks; ++j) {
    const int keep_lo = lo, keep_hi = hi;
    conv(spec.kernel, 1);
    conv(spec.kernel, 1);
    lo = std::min(lo, keep_lo);
    hi = std::max(hi, keep_hi);
  }
  for (int i = 0; i < spec.downsample; ++i) {
    lo *= 2;
    hi = 2 * hi + 1;
    len *= 2;
    conv(spec.kernel, 1);
  }
  conv(spec.kernel, 1);
  if (spec.global_residual) {
    lo = std::min(lo, frame);
    hi = std::max(hi, frame);
  }
  return {lo, hi};
}

namespace {

template <typename T>
void FillLayer(std::vector<T> &params, std::size_t weight, std::size_t bias,
               const ConvShape &conv, double scale, GaussianNoise &noise) {
  const double sd = scale / std::sqrt(static_cast<double>(conv.in * conv.kernel));
  for (std::size_t i = 0; i < conv.weight_count(); ++i)
    params[weight + i] = static_cast<T>(sd * noise.Next());
  for (int o = 0; o < conv.out; ++o) params[bias + o] = T(0);
}

}  // namespace

// Generator ---------------------------------------------------------------

template <typename T>
typename Generator<T>::Layer Generator<T>::AddLayer(const std::string &name,
                                                    ConvShape conv) {
  Layer layer;
  layer.conv = conv;
  layer.weight = layout_.Add(name + ".w", {conv.out, conv.in, conv.kernel});
  layer.bias = layout_.Add(name + ".b", {conv.out});
  return layer;
}

template <typename T>
Generator<T>::Generator(const GeneratorSpec &spec) : spec_(spec) {
  if (spec.dims < 1 || spec.channels < 1 || spec.downsample < 0 ||
      spec.residual_blocks < 0 || spec.kernel < 1 || spec.kernel % 2 == 0)
    throw Error(ErrorCode::kInvalidArgument, "bad generator spec");
  const int k = spec.kernel;
  in_ = AddLayer("in", {spec.dims, 2 * spec.LevelChannels(0), k, 1});
  for (int i = 1; i <= spec.downsample; ++i)
    down_.push_back(AddLayer("down" + std::to_string(i),
                             {spec.LevelChannels(i - 1),
                              2 * spec.LevelChannels(i), k, 2}));
  const int inner = spec.LevelChannels(spec.downsample);
  for (int j = 1; j <= spec.residual_blocks; ++j) {
    res_gate_.push_back(
        AddLayer("res" + std::to_string(j) + ".gate", {inner, 2 * inner, k, 1}));
    res_proj_.push_back(
        AddLayer("res" + std::to_string(j) + ".proj", {inner, inner, k, 1}));
  }
  for (int i = spec.downsample; i >= 1; --i)
    up_.push_back(AddLayer("up" + std::to_string(i),
                           {spec.LevelChannels(i),
                            2 * spec.LevelChannels(i - 1), k, 1}));
  out_ = AddLayer("out", {spec.LevelChannels(0), spec.dims, k, 1});
  params_.assign(layout_.total(), T(0));
}

template <typename T>
void Generator<T>::Initialize(std::uint64_t seed) {
  GaussianNoise noise(seed);
  FillLayer(params_, in_.weight, in_.bias, in_.conv, 1.0, noise);
  for (const auto &l : down_) FillLayer(params_, l.weight, l.bias, l.conv, 1.0, noise);
  for (std::size_t j = 0; j < res_gate_.size(); ++j) {
    FillLayer(params_, res_gate_[j].weight, res_gate_[j].bias, res_gate_[j].conv,
              1.0, noise);
    FillLayer(params_, res_proj_[j].weight, res_proj_[j].bias, res_proj_[j].conv,
              1.0, noise);
  }
  for (const auto &l : up_) FillLayer(params_, l.weight, l.bias, l.conv, 1.0, noise);
  FillLayer(params_, out_.weight, out_.bias, out_.conv, spec_.output_init_scale,
            noise);
}

template <typename T>
Tensor<T> Generator<T>::Forward(const Tensor<T> &x, Cache *cache) const {
  if (x.c != spec_.dims || x.t < 1 || x.t % (1 << spec_.downsample) != 0)
    throw Error(ErrorCode::kShapeMismatch,
                "generator input " + std::to_string(x.c) + "x" +
                    std::to_string(x.t) + " does not fit the layer spec");
  if (cache) {
    cache->inputs.clear();
    cache->pre.clear();
  }
  const T *p = params_.data();
  auto gated = [&](const Layer &l, const Tensor<T> &in) {
    Tensor<T> pre = ConvForward(l.conv, p + l.weight, p + l.bias, in);
    Tensor<T> out = GluForward(pre);
    if (cache) {
      cache->inputs.push_back(in);
      cache->pre.push_back(std::move(pre));
    }
    return out;
  };
  Tensor<T> h = gated(in_, x);
  for (const auto &l : down_) h = gated(l, h);
  for (std::size_t j = 0; j < res_gate_.size(); ++j) {
    Tensor<T> a = gated(res_gate_[j], h);
    const auto &proj = res_proj_[j];
    Tensor<T> branch = ConvForward(proj.conv, p + proj.weight, p + proj.bias, a);
    if (cache) cache->inputs.push_back(std::move(a));
    AddInPlace(h, branch);
  }
  for (const auto &l : up_) h = gated(l, UpsampleForward(h));
  Tensor<T> y = ConvForward(out_.conv, p + out_.weight, p + out_.bias, h);
  if (cache) cache->inputs.push_back(std::move(h));
  if (spec_.global_residual) AddInPlace(y, x);
  return y;
}

template <typename T>
Tensor<T> Generator<T>::Backward(const Cache &cache, const Tensor<T> &grad_out,
                                 T *grads) const {
  const T *p = params_.data();
  int ii = static_cast<int>(cache.inputs.size()) - 1;
  int pi = static_cast<int>(cache.pre.size()) - 1;
  auto wg = [&](const Layer &l) { return grads ? grads + l.weight : nullptr; };
  auto bg = [&](const Layer &l) { return grads ? grads + l.bias : nullptr; };
  auto gated_back = [&](const Layer &l, const Tensor<T> &dout) {
    Tensor<T> dpre = GluBackward(cache.pre[pi--], dout);
    Tensor<T> din;
    ConvBackward(l.conv, p + l.weight, cache.inputs[ii--], dpre, wg(l), bg(l),
                 &din);
    return din;
  };

  Tensor<T> dh;
  ConvBackward(out_.conv, p + out_.weight, cache.inputs[ii--], grad_out,
               wg(out_), bg(out_), &dh);
  for (auto it = up_.rbegin(); it != up_.rend(); ++it)
    dh = UpsampleBackward(gated_back(*it, dh));
  for (int j = static_cast<int>(res_gate_.size()) - 1; j >= 0; --j) {
    const auto &proj = res_proj_[j];
    Tensor<T> da;
    ConvBackward(proj.conv, p + proj.weight, cache.inputs[ii--], dh, wg(proj),
                 bg(proj), &da);
    AddInPlace(dh, gated_back(res_gate_[j], da));
  }
  for (auto it = down_.rbegin(); it != down_.rend(); ++it)
    dh = gated_back(*it, dh);
  Tensor<T> dx = gated_back(in_, dh);
  if (spec_.global_residual) AddInPlace(dx, grad_out);
  return dx;
}

// Discriminator -----------------------------------------------------------

template <typename T>
typename Discriminator<T>::Layer Discriminator<T>::AddLayer(
    const std::string &name, ConvShape conv) {
  Layer layer;
  layer.conv = conv;
  layer.weight = layout_.Add(name + ".w", {conv.out, conv.in, conv.kernel});
  layer.bias = layout_.Add(name + ".b", {conv.out});
  return layer;
}

template <typename T>
Discriminator<T>::Discriminator(const DiscriminatorSpec &spec) : spec_(spec) {
  if (spec.dims < 1 || spec.channels < 1 || spec.strided_layers < 0 ||
      spec.kernel < 1 || spec.kernel % 2 == 0)
    throw Error(ErrorCode::kInvalidArgument, "bad discriminator spec");
  const int k = spec.kernel;
  gated_.push_back(AddLayer("in", {spec.dims, 2 * spec.LevelChannels(0), k, 1}));
  for (int i = 1; i <= spec.strided_layers; ++i)
    gated_.push_back(AddLayer("down" + std::to_string(i),
                              {spec.LevelChannels(i - 1),
                               2 * spec.LevelChannels(i), k, 2}));
  out_ = AddLayer("out", {spec.LevelChannels(spec.strided_layers), 1, k, 1});
  params_.assign(layout_.total(), T(0));
}

template <typename T>
void Discriminator<T>::Initialize(std::uint64_t seed) {
  GaussianNoise noise(seed);
  for (const auto &l : gated_) FillLayer(params_, l.weight, l.bias, l.conv, 1.0, noise);
  FillLayer(params_, out_.weight, out_.bias, out_.conv, 1.0, noise);
}

template <typename T>
Tensor<T> Discriminator<T>::Forward(const Tensor<T> &x, Cache *cache) const {
  if (x.c != spec_.dims || spec_.ScoreLength(x.t) < 1)
    throw Error(ErrorCode::kShapeMismatch,
                "discriminator input does not fit the layer spec");
  if (cache) {
    cache->inputs.clear();
    cache->pre.clear();
  }
  const T *p = params_.data();
  Tensor<T> h = x;
  for (const auto &l : gated_) {
    Tensor<T> pre = ConvForward(l.conv, p + l.weight, p + l.bias, h);
    Tensor<T> next = GluForward(pre);
    if (cache) {
      cache->inputs.push_back(std::move(h));
      cache->pre.push_back(std::move(pre));
    }
    h = std::move(next);
  }
  Tensor<T> score = ConvForward(out_.conv, p + out_.weight, p + out_.bias, h);
  if (cache) cache->inputs.push_back(std::move(h));
  return score;
}

template <typename T>
Tensor<T> Discriminator<T>::Backward(const Cache &cache,
                                     const Tensor<T> &grad_out, T *grads,
                                     bool want_input_grad) const {
  const T *p = params_.data();
  auto wg = [&](const Layer &l) { return grads ? grads + l.weight : nullptr; };
  auto bg = [&](const Layer &l) { return grads ? grads + l.bias : nullptr; };
  int ii = static_cast<int>(cache.inputs.size()) - 1;
  Tensor<T> dh;
  ConvBackward(out_.conv, p + out_.weight, cache.inputs[ii--], grad_out,
               wg(out_), bg(out_), &dh);
  for (int l = static_cast<int>(gated_.size()) - 1; l >= 0; --l) {
    Tensor<T> dpre = GluBackward(cache.pre[l], dh);
    const bool need_input = l > 0 || want_input_grad;
    Tensor<T> din;
    ConvBackward(gated_[l].conv, p + gated_[l].weight, cache.inputs[ii--], dpre,
                 wg(gated_[l]), bg(gated_[l]), need_input ? &din : nullptr);
    dh = std::move(din);
  }
  return dh;
}

// CycleGan ----------------------------------------------------------------

template <typename T>
CycleGan<T>::CycleGan(const ModelSpec &model_spec)
    : spec(model_spec),
      g(model_spec.generator),
      f(model_spec.generator),
      dx(model_spec.discriminator),
      dy(model_spec.discriminator) {}

template <typename T>
void CycleGan<T>::Initialize(std::uint64_t seed) {
  g.Initialize(seed * 4 + 1);
  f.Initialize(seed * 4 + 2);
  dx.Initialize(seed * 4 + 3);
  dy.Initialize(seed * 4 + 4);
}

template class Generator<float>;
template class Generator<double>;
template class Discriminator<float>;
template class Discriminator<double>;
template struct CycleGan<float>;
template struct CycleGan<double>;

}  // namespace voxsan::gan
