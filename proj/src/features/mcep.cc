// src/features/mcep.cc

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

#include "voxsan/features/mcep.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

#include "voxsan/common/error.h"

namespace voxsan {

namespace {

constexpr double kPi = std::numbers::pi;

Eigen::MatrixXd CosineBasis(int bins, int order, double warp) {
  Eigen::MatrixXd basis(bins, order + 1);
  for (int k = 0; k < bins; ++k) {
    const double warped = WarpFrequency(kPi * k / (bins - 1), warp);
    for (int m = 0; m <= order; ++m) basis(k, m) = std::cos(m * warped);
  }
  return basis;
}

}  // namespace

double WarpFrequency(double omega, double alpha) {
  return omega + 2.0 * std::atan(alpha * std::sin(omega) /
                                 (1.0 - alpha * std::cos(omega)));
}

double FitMelWarp(int sample_rate) {
  const int points = 1000;
  const double nyquist = sample_rate / 2.0;
  const double mel_top = std::log1p(nyquist / 1000.0);
  auto error = [&](double alpha) {
    double acc = 0.0;
    for (int i = 1; i <= points; ++i) {
      const double omega = kPi * i / points;
      const double mel = std::log1p(nyquist * i / points / 1000.0) / mel_top;
      const double d = WarpFrequency(omega, alpha) / kPi - mel;
      acc += d * d;
    }
    return acc;
  };
  // Golden-section search; the error is unimodal in alpha.
  double lo = 0.0, hi = 0.95;
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - ratio * (hi - lo), b = lo + ratio * (hi - lo);
  double fa = error(a), fb = error(b);
  while (hi - lo > 1e-6) {
    if (fa < fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - ratio * (hi - lo);
      fa = error(a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + ratio * (hi - lo);
      fb = error(b);
    }
  }
  return 0.5 * (lo + hi);
}

McepTrack EnvelopeToMcep(const SpectralEnvelope &envelope, int order,
                         double warp) {
  if (order < 1)
    throw Error(ErrorCode::kInvalidArgument, "mcep order must be >= 1");
  if (!(warp >= 0.0 && warp < 1.0))
    throw Error(ErrorCode::kInvalidArgument, "warp must lie in [0, 1)");
  const int bins = static_cast<int>(envelope.bins());
  if (bins < order + 2)
    throw Error(ErrorCode::kInvalidArgument, "too few bins for mcep order");

  Eigen::MatrixXd basis = CosineBasis(bins, order, warp);
  Eigen::VectorXd weights(bins);
  for (int k = 0; k < bins; ++k) {
    const double omega = kPi * k / (bins - 1);
    const double slope = (1.0 - warp * warp) /
                         (1.0 - 2.0 * warp * std::cos(omega) + warp * warp);
    weights(k) = slope * ((k == 0 || k == bins - 1) ? 0.5 : 1.0);
  }
  Eigen::MatrixXd weighted = basis.transpose() * weights.asDiagonal();
  Eigen::LDLT<Eigen::MatrixXd> normal(weighted * basis);

  McepTrack track;
  track.warp = warp;
  track.sample_rate = envelope.sample_rate;
  track.values = Matrix(envelope.frames(), order + 1);
  Eigen::VectorXd target(bins);
  for (std::size_t i = 0; i < envelope.frames(); ++i) {
    auto row = envelope.values.row(i);
    for (int k = 0; k < bins; ++k) {
      if (!(row[k] > 0.0) || !std::isfinite(row[k]))
        throw Error(ErrorCode::kNonPositiveEnvelope,
                    "envelope value " + std::to_string(row[k]) + " at frame " +
                        std::to_string(i));
      target(k) = 0.5 * std::log(row[k]);
    }
    Eigen::VectorXd c = normal.solve(weighted * target);
    auto out = track.values.row(i);
    for (int m = 0; m <= order; ++m) out[m] = c(m);
  }
  return track;
}

SpectralEnvelope McepToEnvelope(const McepTrack &mcep, int fft_size) {
  if (fft_size < 2 || fft_size % 2 != 0)
    throw Error(ErrorCode::kInvalidArgument, "fft size must be even");
  const int bins = fft_size / 2 + 1;
  const int order = mcep.order();
  Eigen::MatrixXd basis = CosineBasis(bins, order, mcep.warp);
  SpectralEnvelope env;
  env.fft_size = fft_size;
  env.sample_rate = mcep.sample_rate;
  env.values = Matrix(mcep.frames(), bins);
  for (std::size_t i = 0; i < mcep.frames(); ++i) {
    auto row = mcep.values.row(i);
    Eigen::Map<const Eigen::VectorXd> c(row.data(), order + 1);
    Eigen::VectorXd log_amplitude = basis * c;
    auto out = env.values.row(i);
    for (int k = 0; k < bins; ++k)
      out[k] = std::max(std::exp(2.0 * log_amplitude(k)),
                        std::numeric_limits<double>::min());
  }
  return env;
}

double LogSpectralDistortion(const SpectralEnvelope &a,
                             const SpectralEnvelope &b) {
  if (a.frames() != b.frames() || a.bins() != b.bins())
    throw Error(ErrorCode::kShapeMismatch, "envelope shapes differ");
  if (a.frames() == 0) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < a.frames(); ++i) {
    auto ra = a.values.row(i);
    auto rb = b.values.row(i);
    double acc = 0.0;
    for (std::size_t k = 0; k < ra.size(); ++k) {
      const double d = 10.0 * std::log10(ra[k] / rb[k]);
      acc += d * d;
    }
    total += std::sqrt(acc / ra.size());
  }
  return total / a.frames();
}

}  // namespace voxsan
