// tests/gan_test.cc

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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <vector>

#include "doctest.h"
#include "gradient_check.h"
#include "voxsan/common/binary_io.h"
#include "voxsan/common/error.h"
#include "voxsan/gan/checkpoint.h"
#include "voxsan/gan/gradients.h"
#include "voxsan/gan/losses.h"
#include "voxsan/gan/model.h"
#include "voxsan/gan/trainer.h"

using namespace voxsan;
using namespace voxsan::gan;

namespace {

template <typename Fn>
ErrorCode CodeOf(Fn &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kInvalidArgument;
}

template <typename T>
Tensor<T> Random(int n, int c, int t, std::uint64_t seed, double offset = 0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Tensor<T> x(n, c, t);
  for (auto &v : x.v) v = static_cast<T>(normal(rng) + offset);
  return x;
}

// Smooth random track, frames x dims.
Matrix Track(std::mt19937_64 &rng, int frames, int dims, double offset) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(frames, dims);
  for (int d = 0; d < dims; ++d) {
    double v = normal(rng);
    for (int t = 0; t < frames; ++t) {
      v = 0.8 * v + 0.6 * normal(rng);
      m(t, d) = 0.5 * v + offset;
    }
  }
  return m;
}

std::string TempPath(const std::string &name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("generator: shape, finiteness, determinism") {
  const ModelSpec spec = ProfileSpec("small", 25);
  Generator<float> g(spec.generator);
  g.Initialize(7);
  Tensor<float> zero(2, 25, 64);
  const auto out = g.Forward(zero);
  CHECK(out.SameShape(zero));
  CHECK(std::all_of(out.v.begin(), out.v.end(),
                    [](float v) { return std::isfinite(v); }));
  const auto x = Random<float>(2, 25, 64, 3);
  CHECK(g.Forward(x).v == g.Forward(x).v);
  CHECK(CodeOf([&] { g.Forward(Tensor<float>(1, 24, 64)); }) ==
        ErrorCode::kShapeMismatch);
  CHECK(CodeOf([&] { g.Forward(Tensor<float>(1, 25, 30)); }) ==
        ErrorCode::kShapeMismatch);
}

TEST_CASE("generator: perturbation stays inside the receptive field") {
  const ModelSpec spec = ProfileSpec("small", 8);
  Generator<double> g(spec.generator);
  g.Initialize(11);
  const int length = 128;
  auto x = Random<double>(1, 8, length, 4);
  const auto base = g.Forward(x);
  for (int frame : {0, 37, 64, 127}) {
    auto bumped = x;
    bumped.at(0, 3, frame) += 1.0;
    const auto out = g.Forward(bumped);
    const auto [lo, hi] = GeneratorInfluence(spec.generator, frame, length);
    CHECK(lo <= frame);
    CHECK(hi >= frame);
    bool inside_changed = false;
    for (int c = 0; c < 8; ++c) {
      for (int t = 0; t < length; ++t) {
        const bool changed = out.at(0, c, t) != base.at(0, c, t);
        if (t < lo || t > hi) {
          CHECK_FALSE(changed);
        } else {
          inside_changed |= changed;
        }
      }
    }
    CHECK(inside_changed);
  }
}

TEST_CASE("discriminator: score grid follows stride arithmetic") {
  const ModelSpec spec = ProfileSpec("small", 25);
  Discriminator<float> d(spec.discriminator);
  d.Initialize(5);
  for (int length : {64, 100, 128}) {
    const auto scores = d.Forward(Tensor<float>(3, 25, length));
    CHECK(scores.n == 3);
    CHECK(scores.c == 1);
    int expected = length;
    for (int i = 0; i < spec.discriminator.strided_layers; ++i)
      expected = (expected - 1) / 2 + 1;
    CHECK(scores.t == expected);
    CHECK(scores.t == spec.discriminator.ScoreLength(length));
    CHECK(std::all_of(scores.v.begin(), scores.v.end(),
                      [](float v) { return std::isfinite(v); }));
  }
  const auto x = Random<float>(1, 25, 64, 9);
  CHECK(d.Forward(x).v == d.Forward(x).v);
}

TEST_CASE("losses: worked examples") {
  Tensor<double> ones(1, 1, 4), zeros(1, 1, 4), half(1, 1, 4);
  std::fill(ones.v.begin(), ones.v.end(), 1.0);
  std::fill(half.v.begin(), half.v.end(), 0.5);
  CHECK(AdversarialLoss(ones, zeros).discriminator == 0.0);
  CHECK(AdversarialLoss(zeros, ones).generator == 0.0);
  CHECK(AdversarialLoss(half, half).discriminator == 0.5);
  CHECK(AdversarialLoss(half, half).generator == 0.25);

  const auto a = Random<double>(2, 3, 5, 1);
  auto b = a;
  CHECK(L1Loss(a, b) == 0.0);
  for (auto &v : b.v) v += 0.5;
  CHECK(L1Loss(a, b) == doctest::Approx(0.5).epsilon(1e-12));
  const auto c = Random<double>(2, 3, 5, 2);
  CHECK(L1Loss(a, c) == L1Loss(c, a));
  CHECK(CodeOf([&] { L1Loss(a, Tensor<double>(2, 3, 4)); }) ==
        ErrorCode::kShapeMismatch);

  CHECK(FullLoss(0.5, 0.2, 0.0, 10.0, 0.0) == doctest::Approx(2.5));
  CHECK(FullLoss(0.5, 0.2, 0.3, 0.0, 0.0) == 0.5);
  CHECK(FullLoss(0.5, 0.0, 0.0, 10.0, 5.0) == 0.5);
}

TEST_CASE("full loss is affine in the cycle weight") {
  CycleGan<double> model(ProfileSpec("tiny", 6));
  model.Initialize(2);
  const auto x = Random<double>(2, 6, 16, 1);
  const auto y = Random<double>(2, 6, 16, 2, 0.5);
  const auto l0 = EvaluateLosses(model, x, y, 0.0, 5.0);
  const auto l1 = EvaluateLosses(model, x, y, 1.0, 5.0);
  const auto l2 = EvaluateLosses(model, x, y, 2.0, 5.0);
  CHECK(std::abs((l1.full - l0.full) - l0.cycle) < 1e-9);
  CHECK(std::abs((l2.full - l1.full) - l0.cycle) < 1e-9);
}

TEST_CASE("gradients match central finite differences") {
  for (int dims : {6, 8}) {
    CycleGan<double> model(ProfileSpec("tiny", dims));
    model.Initialize(3);
    const auto x = Random<double>(2, dims, 16, 5);
    const auto y = Random<double>(2, dims, 16, 6, 0.5);
    const auto result = CheckGradients(model, x, y, 10.0, 5.0, 1e-5);
    MESSAGE("dims " << dims << ": " << result.checked << " parameters, "
                    << result.refined << " refined, worst relative error "
                    << result.worst);
    CHECK(result.worst < 1e-4);
  }
}

TEST_CASE("gradients: zero weights and determinism") {
  CycleGan<double> model(ProfileSpec("tiny", 6));
  model.Initialize(4);
  const auto x = Random<double>(2, 6, 16, 7);
  const auto y = Random<double>(2, 6, 16, 8);
  const auto with = ComputeGradients(model, x, y, 0.0, 0.0);
  // Moving the targets of cycle and identity terms must not matter at
  // zero weight: the generator gradient is adversarial only.
  const auto again = ComputeGradients(model, x, y, 0.0, 0.0);
  CHECK(with.g == again.g);
  CHECK(with.dx == again.dx);
  CHECK(with.losses.full == with.losses.adversarial_g);

  const auto weighted = ComputeGradients(model, x, y, 10.0, 5.0);
  CHECK(weighted.dx == with.dx);
  CHECK(weighted.dy == with.dy);
  CHECK(weighted.g != with.g);

  CHECK(CodeOf([&] {
          ComputeGradients(model, x, Random<double>(2, 6, 32, 1), 1.0, 1.0);
        }) == ErrorCode::kShapeMismatch);
  auto bad = x;
  bad.v[3] = std::nan("");
  CHECK(CodeOf([&] { ComputeGradients(model, bad, y, 1.0, 1.0); }) ==
        ErrorCode::kNonFiniteLoss);
}

TEST_CASE("one training step lowers the discriminator objective") {
  const ModelSpec spec = ProfileSpec("tiny", 6);
  TrainConfig config;
  config.lambda_cyc = 0.0;
  config.lambda_id = 0.0;
  config.segment_length = 16;
  config.profile = "tiny";
  config.lr_discriminator = 1e-3;
  Trainer trainer(spec, config);
  const auto x = Random<float>(4, 6, 16, 1);
  const auto y = Random<float>(4, 6, 16, 2, 0.5);
  const CycleGan<float> before = trainer.model();
  const double d_before = EvaluateLosses(before, x, y, 0, 0).adversarial_d;
  trainer.Step(x, y, 0);
  CycleGan<float> after = before;
  after.dx = trainer.model().dx;
  after.dy = trainer.model().dy;
  const double d_after = EvaluateLosses(after, x, y, 0, 0).adversarial_d;
  CHECK(d_after < d_before);
}

TEST_CASE("training is deterministic") {
  const ModelSpec spec = ProfileSpec("tiny", 4);
  TrainConfig config;
  config.segment_length = 16;
  config.profile = "tiny";
  config.batch_size = 4;
  config.epochs = 2;
  std::mt19937_64 rng(1);
  std::vector<Matrix> x, y;
  for (int i = 0; i < 8; ++i) x.push_back(Track(rng, 20 + i, 4, 0.0));
  for (int i = 0; i < 6; ++i) y.push_back(Track(rng, 30, 4, 0.5));
  Trainer a(spec, config), b(spec, config);
  a.Train(x, y);
  b.Train(x, y);
  REQUIRE(a.history().size() == 4);
  CHECK(a.epochs_completed() == 2);
  for (std::size_t i = 0; i < a.history().size(); ++i)
    CHECK(a.history()[i].losses.full == b.history()[i].losses.full);
  CHECK(a.model().g.params() == b.model().g.params());
  CHECK(a.model().dy.params() == b.model().dy.params());

  CHECK(CodeOf([&] { a.Train({}, y); }) == ErrorCode::kEmptyCorpus);
  CHECK(CodeOf([&] { a.Train({Matrix(20, 5)}, y); }) ==
        ErrorCode::kShapeMismatch);
}

TEST_CASE("identity weight pulls G toward the identity map") {
  const ModelSpec spec = ProfileSpec("tiny", 4);
  TrainConfig config;
  config.segment_length = 16;
  config.profile = "tiny";
  config.batch_size = 8;
  config.lambda_id = 50.0;
  config.lr_generator = 1e-3;
  config.lr_discriminator = 5e-4;
  config.epochs = 3;
  std::mt19937_64 rng(2);
  std::vector<Matrix> x, y, held;
  for (int i = 0; i < 64; ++i) x.push_back(Track(rng, 16, 4, 0.0));
  for (int i = 0; i < 64; ++i) y.push_back(Track(rng, 16, 4, 0.0));
  for (int i = 0; i < 16; ++i) held.push_back(Track(rng, 16, 4, 0.0));
  const auto batch = ToBatch(held);
  Trainer trainer(spec, config);
  auto distance = [&] {
    const auto out = trainer.model().g.Forward(batch);
    double sum = 0.0;
    for (std::size_t i = 0; i < out.v.size(); ++i)
      sum += std::abs(out.v[i] - batch.v[i]);
    return sum / out.v.size();
  };
  std::vector<double> trace = {distance()};
  const int steps_per_epoch = 64 / config.batch_size;
  trainer.Train(x, y, [&](const StepRecord &rec) {
    if ((rec.step + 1) % steps_per_epoch == 0) trace.push_back(distance());
  });
  REQUIRE(trace.size() == 4);
  MESSAGE("mean |G(x) - x|: " << trace[0] << " " << trace[1] << " "
                              << trace[2] << " " << trace[3]);
  CHECK(trace[1] < trace[0]);
  CHECK(trace[2] < trace[1]);
  CHECK(trace[3] < trace[2]);
}

TEST_CASE("checkpoint: round trip and damage") {
  Checkpoint ckpt;
  ckpt.spec = ProfileSpec("tiny", 4);
  ckpt.config.profile = "tiny";
  ckpt.config.segment_length = 16;
  ckpt.model = CycleGan<float>(ckpt.spec);
  ckpt.model.Initialize(9);
  ckpt.domain_x = "angry";
  ckpt.domain_y = "neutral";
  ckpt.epoch = 3;
  ckpt.stats.source.logf0 = {5.1, 0.2, 100};
  ckpt.stats.target.logf0 = {4.8, 0.15, 90};
  ckpt.stats.source.norm.mean = {1, 2, 3, 4};
  ckpt.stats.source.norm.std = {1, 1, 0.5, 1};
  ckpt.stats.source.norm.flagged = {false, false, false, true};
  ckpt.stats.target.norm = ckpt.stats.source.norm;
  StepRecord rec;
  rec.step = 7;
  rec.losses.full = 1.25;
  ckpt.history = {rec};

  const std::string path = TempPath("voxsan_gan_test.ckpt");
  SaveCheckpoint(ckpt, path);
  const Checkpoint back = LoadCheckpoint(path);
  CHECK(back.spec == ckpt.spec);
  CHECK(back.config == ckpt.config);
  CHECK(back.domain_x == "angry");
  CHECK(back.epoch == 3);
  CHECK(back.stats.source.logf0.mean == 5.1);
  CHECK(back.stats.target.norm.flagged == ckpt.stats.target.norm.flagged);
  CHECK(back.model.g.params() == ckpt.model.g.params());
  CHECK(back.model.f.params() == ckpt.model.f.params());
  CHECK(back.model.dx.params() == ckpt.model.dx.params());
  CHECK(back.model.dy.params() == ckpt.model.dy.params());
  REQUIRE(back.history.size() == 1);
  CHECK(back.history[0].step == 7);
  CHECK(EncodeCheckpoint(back) == EncodeCheckpoint(ckpt));

  auto bytes = ReadFileBytes(path);
  auto truncated = bytes;
  truncated.resize(bytes.size() / 2);
  CHECK(CodeOf([&] { DecodeCheckpoint(truncated); }) ==
        ErrorCode::kCorruptCheckpoint);
  auto flipped = bytes;
  flipped[bytes.size() / 2] ^= 0x10;
  CHECK(CodeOf([&] { DecodeCheckpoint(flipped); }) ==
        ErrorCode::kCorruptCheckpoint);
  auto future = bytes;
  future[4] = 2;
  CHECK(CodeOf([&] { DecodeCheckpoint(future); }) ==
        ErrorCode::kVersionMismatch);
  std::filesystem::remove(path);

  const std::string csv = LossHistoryCsv(ckpt.history);
  CHECK(csv.rfind("step,epoch,", 0) == 0);
  CHECK(csv.find("\n7,0,") != std::string::npos);
}
