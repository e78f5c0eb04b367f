// src/vocoder/envelope.cc

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

#include "voxsan/vocoder/envelope.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "voxsan/common/error.h"
#include "voxsan/vocoder/dsp.h"
#include "voxsan/vocoder/fft.h"

namespace voxsan {

namespace {

// Shared FFT state for one EstimateEnvelope() call.
class EnvelopeWorkspace {
 public:
  EnvelopeWorkspace(int fs, int fft_size, double q1)
      : fs_(fs), fft_size_(fft_size), q1_(q1), forward_(fft_size),
        inverse_(fft_size) {}

  void Estimate(const std::vector<double> &x, double f0, double position,
                std::span<double> envelope) {
    WindowWaveform(x, f0, position);
    auto power = PowerSpectrum(f0);
    auto smoothed = dsp::LinearSmoothing(power, f0 * 2.0 / 3.0, fs_,
                                         fft_size_);
    for (double &v : smoothed) v = std::max(v, 0.0) + dsp::kEps;
    SmoothingWithRecovery(smoothed, f0, envelope);
  }

 private:
  void WindowWaveform(const std::vector<double> &x, double f0,
                      double position) {
    const int half = static_cast<int>(std::lround(1.5 * fs_ / f0));
    const int length = 2 * half + 1;
    const long origin = std::lround(position * fs_ + 0.001);
    const long last = static_cast<long>(x.size()) - 1;
    window_.resize(length);
    double norm = 0.0;
    for (int i = 0; i < length; ++i) {
      double t = (i - half) / 1.5 / fs_;
      window_[i] = 0.5 * std::cos(std::numbers::pi * t * f0) + 0.5;
      norm += window_[i] * window_[i];
    }
    norm = std::sqrt(norm);
    for (double &w : window_) w /= norm;

    auto wave = forward_.waveform();
    std::fill(wave.begin(), wave.end(), 0.0);
    double weighted = 0.0, total = 0.0;
    for (int i = 0; i < length; ++i) {
      long idx = std::clamp(origin + i - half, 0L, last);
      wave[i] = x[idx] * window_[i];
      weighted += wave[i];
      total += window_[i];
    }
    // Remove the window-weighted DC offset.
    const double coefficient = weighted / total;
    for (int i = 0; i < length; ++i) wave[i] -= window_[i] * coefficient;
  }

  std::vector<double> PowerSpectrum(double f0) {
    forward_.Execute();
    auto spec = forward_.spectrum();
    std::vector<double> power(fft_size_ / 2 + 1);
    for (std::size_t i = 0; i < power.size(); ++i) power[i] = std::norm(spec[i]);
    return dsp::DcCorrection(power, f0, fs_, fft_size_);
  }

  void SmoothingWithRecovery(const std::vector<double> &smoothed, double f0,
                             std::span<double> envelope) {
    const int half = fft_size_ / 2;
    auto wave = forward_.waveform();
    for (int i = 0; i <= half; ++i) wave[i] = std::log(smoothed[i]);
    for (int i = 1; i < half; ++i) wave[fft_size_ - i] = wave[i];
    forward_.Execute();
    auto cep = forward_.spectrum();
    auto out = inverse_.spectrum();
    out[0] = {cep[0].real() / fft_size_, 0.0};
    for (int i = 1; i <= half; ++i) {
      const double quefrency = static_cast<double>(i) / fs_;
      const double arg = std::numbers::pi * f0 * quefrency;
      const double smoothing = std::sin(arg) / arg;
      const double compensation =
          (1.0 - 2.0 * q1_) + 2.0 * q1_ * std::cos(2.0 * arg);
      out[i] = {cep[i].real() * smoothing * compensation / fft_size_, 0.0};
    }
    inverse_.Execute();
    auto log_env = inverse_.waveform();
    for (int i = 0; i <= half; ++i) envelope[i] = std::exp(log_env[i]);
  }

  int fs_;
  int fft_size_;
  double q1_;
  ForwardRealFft forward_;
  InverseRealFft inverse_;
  std::vector<double> window_;
};

}  // namespace

double EnvelopeF0Floor(int sample_rate, int fft_size) {
  return 3.0 * sample_rate / (fft_size - 3.0);
}

SpectralEnvelope EstimateEnvelope(const AudioClip &clip, const F0Track &f0,
                                  const EnvelopeOptions &options) {
  const std::size_t expected =
      FrameCount(clip.samples.size(), clip.sample_rate, f0.frame_period_ms);
  if (f0.size() != expected)
    throw Error(ErrorCode::kInconsistentFrames,
                "F0 track has " + std::to_string(f0.size()) +
                    " frames, clip implies " + std::to_string(expected));
  if (options.fft_size < 16 || (options.fft_size & (options.fft_size - 1)))
    throw Error(ErrorCode::kInvalidArgument,
                "envelope fft size must be a power of two");
  if (clip.samples.empty())
    throw Error(ErrorCode::kInvalidArgument, "empty clip");

  SpectralEnvelope env;
  env.fft_size = options.fft_size;
  env.sample_rate = clip.sample_rate;
  env.values = Matrix(f0.size(), options.fft_size / 2 + 1);
  const double floor_f0 = EnvelopeF0Floor(clip.sample_rate, options.fft_size);
  const double fallback = std::max(options.default_f0, floor_f0 + 1.0);
  EnvelopeWorkspace workspace(clip.sample_rate, options.fft_size, options.q1);
  for (std::size_t i = 0; i < f0.size(); ++i) {
    double current = f0.values[i] <= floor_f0 ? fallback : f0.values[i];
    double position = i * f0.frame_period_ms / 1000.0;
    workspace.Estimate(clip.samples, current, position, env.values.row(i));
  }
  return env;
}

}  // namespace voxsan
