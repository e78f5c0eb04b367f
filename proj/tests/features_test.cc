// tests/features_test.cc

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

#include <array>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "voxsan/common/error.h"
#include "voxsan/features/f0_stats.h"
#include "voxsan/features/mcep.h"
#include "voxsan/features/normalize.h"
#include "voxsan/features/segments.h"
#include "voxsan/features/stats_io.h"
#include "voxsan/vocoder/vocoder.h"

using namespace voxsan;

namespace {

// Harmonics of f0 shaped by three resonances; a crude vowel.
AudioClip Vowel(double f0, std::array<double, 3> formants, double seconds = 0.6) {
  const int fs = 16000;
  AudioClip c;
  c.samples.resize(static_cast<std::size_t>(fs * seconds));
  std::vector<double> amps;
  for (int h = 1; h * f0 < fs / 2; ++h) {
    const double f = h * f0;
    double gain = 0.0;
    for (double formant : formants) {
      const double bw = 80.0 + 0.05 * formant;
      gain += 1.0 / (1.0 + std::pow((f - formant) / bw, 2.0));
    }
    amps.push_back(gain / h);
  }
  for (std::size_t i = 0; i < c.samples.size(); ++i) {
    double x = 0.0;
    for (std::size_t h = 0; h < amps.size(); ++h)
      x += amps[h] * std::sin(2.0 * std::numbers::pi * f0 * (h + 1) * i / fs);
    c.samples[i] = 0.2 * x;
  }
  return c;
}

F0Track Track(std::vector<double> values) {
  F0Track t;
  t.values = std::move(values);
  return t;
}

}  // namespace

TEST_CASE("mcep: flat envelope has only the energy term") {
  SpectralEnvelope env;
  env.values = Matrix(4, 513, 0.037);
  auto mcep = EnvelopeToMcep(env, 24, 0.42);
  REQUIRE(mcep.values.cols() == 25);
  for (std::size_t i = 0; i < mcep.frames(); ++i) {
    CHECK(std::abs(mcep.values(i, 0) - 0.5 * std::log(0.037)) < 1e-9);
    for (int m = 1; m <= 24; ++m) CHECK(std::abs(mcep.values(i, m)) < 1e-6);
  }
}

TEST_CASE("mcep: zero coefficients give a unit envelope") {
  McepTrack mcep;
  mcep.values = Matrix(3, 25, 0.0);
  auto env = McepToEnvelope(mcep, 1024);
  CHECK(env.bins() == 513);
  CHECK(env.frames() == 3);
  for (double v : env.values.data()) CHECK(std::abs(v - 1.0) < 1e-12);
  CHECK(McepToEnvelope(mcep, 512).bins() == 257);
}

TEST_CASE("mcep: default warp matches the mel scale at 16 kHz") {
  CHECK(std::abs(FitMelWarp(16000) - kDefaultWarp) < 0.02);
  CHECK(FitMelWarp(8000) < FitMelWarp(16000));
  CHECK(FitMelWarp(16000) < FitMelWarp(44100));
  CHECK(WarpFrequency(0.0, 0.42) == 0.0);
  CHECK(std::abs(WarpFrequency(std::numbers::pi, 0.42) - std::numbers::pi) < 1e-12);
  CHECK(WarpFrequency(0.5, 0.42) > 0.5);
}

TEST_CASE("mcep: vowel envelopes survive the round trip") {
  const std::array<std::array<double, 3>, 3> vowels = {
      {{730, 1090, 2440}, {270, 2290, 3010}, {300, 870, 2240}}};
  for (double f0 : {110.0, 210.0}) {
    for (const auto &formants : vowels) {
      auto features = Analyze(Vowel(f0, formants));
      auto mcep = EnvelopeToMcep(features.envelope);
      auto back = McepToEnvelope(mcep, features.envelope.fft_size);
      CHECK(LogSpectralDistortion(features.envelope, back) < 1.5);
    }
  }
}

TEST_CASE("mcep: argument errors") {
  SpectralEnvelope env;
  env.values = Matrix(2, 513, 1.0);
  CHECK_THROWS_AS(EnvelopeToMcep(env, 0, 0.42), Error);
  CHECK_THROWS_AS(EnvelopeToMcep(env, 24, 1.0), Error);
  env.values(1, 7) = 0.0;
  try {
    EnvelopeToMcep(env);
    FAIL("expected NonPositiveEnvelope");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kNonPositiveEnvelope);
  }
}

TEST_CASE("logf0: statistics") {
  std::vector<F0Track> one = {Track({200, 200, 0, 200})};
  auto s = ComputeLogF0Stats(std::span<const F0Track>(one));
  CHECK(s.mean == doctest::Approx(std::log(200.0)));
  CHECK(s.std == 0.0);
  CHECK(s.voiced_frame_count == 3);

  std::vector<F0Track> two = {Track({100}), Track({0, 400})};
  s = ComputeLogF0Stats(std::span<const F0Track>(two));
  CHECK(s.mean == doctest::Approx((std::log(100.0) + std::log(400.0)) / 2));
  CHECK(s.std == doctest::Approx(std::abs(std::log(400.0) - std::log(100.0)) / 2));

  std::vector<F0Track> none = {Track({0, 0})};
  try {
    ComputeLogF0Stats(std::span<const F0Track>(none));
    FAIL("expected NoVoicedFrames");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kNoVoicedFrames);
  }
}

TEST_CASE("logf0: conversion") {
  LogF0Stats src{std::log(200.0), 0.2, 10};
  LogF0Stats tgt{std::log(100.0), 0.2, 10};
  auto input = Track({200.0, 0.0, 150.0, 260.0});
  auto same = ConvertLogF0(input, src, src);
  for (std::size_t i = 0; i < input.size(); ++i)
    CHECK(same.values[i] == doctest::Approx(input.values[i]).epsilon(1e-12));

  auto shifted = ConvertLogF0(input, src, tgt);
  CHECK(shifted.values[0] == doctest::Approx(100.0));
  CHECK(shifted.values[1] == 0.0);

  LogF0Stats wide{std::log(120.0), 0.35, 10};
  auto there = ConvertLogF0(input, src, wide);
  auto back = ConvertLogF0(there, wide, src);
  for (std::size_t i = 0; i < input.size(); ++i) {
    CHECK((there.values[i] > 0.0) == (input.values[i] > 0.0));
    if (input.values[i] > 0.0)
      CHECK(std::abs(back.values[i] / input.values[i] - 1.0) < 1e-9);
  }

  LogF0Stats flat{std::log(200.0), 0.0, 5};
  auto fallback = ConvertLogF0(input, flat, tgt);
  CHECK(fallback.values[2] == doctest::Approx(75.0));
}

TEST_CASE("norm: fit, apply, invert") {
  Matrix a(3, 3), b(2, 3);
  double v = 0.0;
  for (Matrix *m : {&a, &b})
    for (std::size_t r = 0; r < m->rows(); ++r) {
      (*m)(r, 0) = std::sin(v += 1.3) * 5.0;
      (*m)(r, 1) = 4.25;
      (*m)(r, 2) = v * v;
    }
  std::vector<Matrix> tracks = {a, b};
  auto stats = FitNorm(std::span<const Matrix>(tracks));
  CHECK_FALSE(stats.flagged[0]);
  CHECK(stats.flagged[1]);
  CHECK(stats.std[1] == 1.0);

  double mean0 = 0.0, sq0 = 0.0;
  for (const Matrix &t : tracks) {
    auto n = ApplyNorm(t, stats);
    auto back = InvertNorm(n, stats);
    for (std::size_t i = 0; i < t.data().size(); ++i)
      CHECK(std::abs(back.data()[i] - t.data()[i]) < 1e-10);
    for (std::size_t r = 0; r < n.rows(); ++r) {
      mean0 += n(r, 0);
      sq0 += n(r, 0) * n(r, 0);
      CHECK(n(r, 1) == 0.0);
    }
  }
  CHECK(std::abs(mean0 / 5) < 1e-12);
  CHECK(std::abs(sq0 / 5 - 1.0) < 1e-12);

  std::vector<Matrix> tiny = {Matrix(1, 3)};
  try {
    FitNorm(std::span<const Matrix>(tiny));
    FAIL("expected EmptyInput");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kEmptyInput);
  }
  CHECK_THROWS_AS(ApplyNorm(Matrix(2, 4), stats), Error);
}

TEST_CASE("segments: exact, short and long tracks") {
  Matrix track(8, 2);
  for (std::size_t r = 0; r < 8; ++r) {
    track(r, 0) = r;
    track(r, 1) = -static_cast<double>(r);
  }
  auto exact = MakeSegments(track, 8, 1, "c");
  REQUIRE(exact.size() == 1);
  CHECK(exact[0].frames == track);
  CHECK(exact[0].clip_id == "c");

  auto padded = MakeSegments(track, 11, 1);
  REQUIRE(padded.size() == 1);
  REQUIRE(padded[0].frames.rows() == 11);
  CHECK(padded[0].frames(7, 0) == 7);
  CHECK(padded[0].frames(8, 0) == 6);
  CHECK(padded[0].frames(9, 0) == 5);
  CHECK(padded[0].frames(10, 0) == 4);

  auto first = MakeSegments(track, 3, 42, "x", 5);
  auto second = MakeSegments(track, 3, 42, "x", 5);
  REQUIRE(first.size() == 5);
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].start == second[i].start);
    CHECK(first[i].start <= 5);
    CHECK(first[i].frames(0, 0) == first[i].start);
  }
  CHECK_THROWS_AS(MakeSegments(track, 0, 1), Error);
  CHECK(ReflectIndex(-1, 4) == 1);
  CHECK(ReflectIndex(9, 4) == 3);
  CHECK(ReflectIndex(5, 1) == 0);
}

TEST_CASE("stats file: exact round trip and header checks") {
  ConversionStats stats;
  stats.source.logf0 = {std::log(180.0), 0.1234567890123, 4567};
  stats.target.logf0 = {std::log(110.0) / 3.0, 0.0, 1};
  stats.source.norm = {{1.0 / 3.0, -2.5}, {0.1, 1.0}, {false, true}};
  stats.target.norm = {{7.0, 1e-300}, {2.0 / 7.0, 3.0}, {false, false}};
  auto text = FormatStats(stats);
  CHECK(text.rfind("voxsan-stats 1\n", 0) == 0);
  auto back = ParseStats(text);
  CHECK(back.source.logf0.mean == stats.source.logf0.mean);
  CHECK(back.source.logf0.std == stats.source.logf0.std);
  CHECK(back.source.logf0.voiced_frame_count == 4567);
  CHECK(back.target.logf0.mean == stats.target.logf0.mean);
  CHECK(back.source.norm.mean == stats.source.norm.mean);
  CHECK(back.target.norm.std == stats.target.norm.std);
  CHECK(back.source.norm.flagged == stats.source.norm.flagged);

  auto code_of = [](const std::string &t) {
    try {
      ParseStats(t);
    } catch (const Error &e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  CHECK(code_of("hello 1\n") == ErrorCode::kCorruptHeader);
  CHECK(code_of("voxsan-stats 2\n") == ErrorCode::kVersionMismatch);
  CHECK(code_of("voxsan-stats 1\nsource.logf0.mean = 1\n") == ErrorCode::kBadConfig);
}
