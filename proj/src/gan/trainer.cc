// src/gan/trainer.cc

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

#include "voxsan/gan/trainer.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "voxsan/common/error.h"
#include "voxsan/features/segments.h"

namespace voxsan::gan {

void TrainConfig::Validate() const {
  auto fail = [](const std::string &what) {
    throw Error(ErrorCode::kInvalidArgument, "train config: " + what);
  };
  if (!(lambda_cyc >= 0.0) || !(lambda_id >= 0.0)) fail("lambdas must be >= 0");
  if (!(lr_generator > 0.0) || !(lr_discriminator > 0.0))
    fail("learning rates must be > 0");
  if (!(beta1 >= 0.0 && beta1 < 1.0) || !(beta2 >= 0.0 && beta2 < 1.0))
    fail("betas must lie in [0, 1)");
  if (epochs < 1) fail("epochs must be >= 1");
  if (batch_size < 1) fail("batch size must be >= 1");
  if (segment_length < 1) fail("segment length must be >= 1");
  if (max_steps < 0) fail("max steps must be >= 0");
  if (!(decay_start >= 0.0 && decay_start <= 1.0))
    fail("decay start must lie in [0, 1]");
}

Tensor<float> ToBatch(const std::vector<Matrix> &segments) {
  if (segments.empty()) return {};
  const int frames = static_cast<int>(segments.front().rows());
  const int dims = static_cast<int>(segments.front().cols());
  Tensor<float> batch(static_cast<int>(segments.size()), dims, frames);
  for (int b = 0; b < batch.n; ++b) {
    const Matrix &m = segments[b];
    if (m.rows() != static_cast<std::size_t>(frames) ||
        m.cols() != static_cast<std::size_t>(dims))
      throw Error(ErrorCode::kShapeMismatch, "segments differ in shape");
    for (int t = 0; t < frames; ++t)
      for (int d = 0; d < dims; ++d)
        batch.at(b, d, t) = static_cast<float>(m(t, d));
  }
  return batch;
}

Matrix FromBatch(const Tensor<float> &batch, int item) {
  Matrix m(batch.t, batch.c);
  for (int t = 0; t < batch.t; ++t)
    for (int d = 0; d < batch.c; ++d) m(t, d) = batch.at(item, d, t);
  return m;
}

Trainer::Trainer(const ModelSpec &spec, const TrainConfig &config)
    : config_(config), model_(spec) {
  config_.Validate();
  model_.Initialize(config_.seed);
  opt_g_ = Adam<float>(model_.g.params().size(), config_.lr_generator,
                       config_.beta1, config_.beta2);
  opt_f_ = Adam<float>(model_.f.params().size(), config_.lr_generator,
                       config_.beta1, config_.beta2);
  opt_dx_ = Adam<float>(model_.dx.params().size(), config_.lr_discriminator,
                        config_.beta1, config_.beta2);
  opt_dy_ = Adam<float>(model_.dy.params().size(), config_.lr_discriminator,
                        config_.beta1, config_.beta2);
}

double Trainer::IdentityWeight(int epoch) const {
  if (config_.identity_epochs >= 0 && epoch >= config_.identity_epochs)
    return 0.0;
  return config_.lambda_id;
}

StepRecord Trainer::Step(const Tensor<float> &x, const Tensor<float> &y,
                         int epoch) {
  auto grads = ComputeGradients(model_, x, y, config_.lambda_cyc,
                                IdentityWeight(epoch));
  opt_g_.Step(model_.g.params(), grads.g);
  opt_f_.Step(model_.f.params(), grads.f);
  opt_dx_.Step(model_.dx.params(), grads.dx);
  opt_dy_.Step(model_.dy.params(), grads.dy);
  StepRecord record{epoch, static_cast<int>(history_.size()), grads.losses};
  history_.push_back(record);
  return record;
}

void Trainer::Train(const std::vector<Matrix> &x, const std::vector<Matrix> &y,
                    const Observer &observer) {
  if (x.empty() || y.empty())
    throw Error(ErrorCode::kEmptyCorpus, "both domains need training data");
  const std::size_t dims = static_cast<std::size_t>(model_.spec.generator.dims);
  for (const auto *set : {&x, &y})
    for (const Matrix &m : *set)
      if (m.cols() != dims || m.rows() == 0)
        throw Error(ErrorCode::kShapeMismatch,
                    "training track does not match model dims");

  const std::size_t length = static_cast<std::size_t>(config_.segment_length);
  const std::size_t pairs = std::max(x.size(), y.size());
  const std::size_t batch = static_cast<std::size_t>(config_.batch_size);
  const std::size_t steps = (pairs + batch - 1) / batch;

  auto shuffled = [](std::size_t n, std::mt19937_64 &rng) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
    return order;
  };
  auto crop = [&](const Matrix &track, std::mt19937_64 &rng) {
    if (track.rows() <= length) return Window(track, 0, length);
    return Window(track, rng() % (track.rows() - length + 1), length);
  };

  std::size_t planned = steps * static_cast<std::size_t>(config_.epochs);
  if (config_.max_steps > 0)
    planned = std::min(planned, static_cast<std::size_t>(config_.max_steps));
  const double decay_from = config_.decay_start * static_cast<double>(planned);
  auto set_rates = [&](std::size_t step) {
    double scale = 1.0;
    if (static_cast<double>(step) >= decay_from && planned > decay_from)
      scale = (static_cast<double>(planned) - static_cast<double>(step)) /
              (static_cast<double>(planned) - decay_from);
    opt_g_.set_lr(config_.lr_generator * scale);
    opt_f_.set_lr(config_.lr_generator * scale);
    opt_dx_.set_lr(config_.lr_discriminator * scale);
    opt_dy_.set_lr(config_.lr_discriminator * scale);
  };

  for (int epoch = epochs_completed_; epoch < config_.epochs; ++epoch) {
    std::mt19937_64 rng(config_.seed * 1000003ULL + static_cast<std::uint64_t>(epoch));
    auto order_x = shuffled(x.size(), rng);
    auto order_y = shuffled(y.size(), rng);
    for (std::size_t s = 0; s < steps; ++s) {
      if (config_.max_steps > 0 &&
          history_.size() >= static_cast<std::size_t>(config_.max_steps))
        return;
      std::vector<Matrix> bx, by;
      for (std::size_t k = 0; k < batch; ++k) {
        const std::size_t i = (s * batch + k) % pairs;
        bx.push_back(crop(x[order_x[i % x.size()]], rng));
        by.push_back(crop(y[order_y[i % y.size()]], rng));
      }
      set_rates(history_.size());
      auto record = Step(ToBatch(bx), ToBatch(by), epoch);
      if (observer) observer(record);
    }
    epochs_completed_ = epoch + 1;
  }
}

}  // namespace voxsan::gan
