// src/vocoder/synthesis.cc

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

#include "voxsan/vocoder/synthesis.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "voxsan/common/error.h"
#include "voxsan/vocoder/dsp.h"
#include "voxsan/vocoder/fft.h"

namespace voxsan {

double GaussianNoise::Uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double GaussianNoise::Next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - Uniform();
  const double u2 = Uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

namespace {

struct Pulse {
  long index;
  double time_shift;  // samples between the phase wrap and `index`
  bool voiced;
};

std::vector<Pulse> PulseLocations(const F0Track &f0, int fs,
                                  std::size_t length, double unvoiced_hz) {
  std::vector<Pulse> pulses;
  const double hop = f0.frame_period_ms * fs / 1000.0;
  double phase = 0.0;
  double previous_wrap = 0.0;
  for (std::size_t n = 0; n < length; ++n) {
    std::size_t frame = std::min<std::size_t>(
        f0.size() - 1, static_cast<std::size_t>(std::lround(n / hop)));
    const double value = f0.values[frame];
    const bool voiced = value > 0.0;
    const double rate = voiced ? value : unvoiced_hz;
    const double step = 2.0 * std::numbers::pi * rate / fs;
    phase += step;
    double wrapped = std::fmod(phase, 2.0 * std::numbers::pi);
    if (n == 0 || wrapped < previous_wrap)
      pulses.push_back({static_cast<long>(n), n == 0 ? 0.0 : wrapped / step,
                        voiced});
    previous_wrap = wrapped;
  }
  return pulses;
}

// Linear interpolation between the two frames around `position`.
void FrameAt(const Matrix &m, double position, std::vector<double> &out) {
  const std::size_t last = m.rows() - 1;
  const std::size_t lo = std::min(last, static_cast<std::size_t>(position));
  const std::size_t hi = std::min(last, lo + 1);
  const double w = std::clamp(position - static_cast<double>(lo), 0.0, 1.0);
  auto a = m.row(lo);
  auto b = m.row(hi);
  out.resize(m.cols());
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = (1.0 - w) * a[k] + w * b[k];
}

class PulseRenderer {
 public:
  explicit PulseRenderer(int fft_size)
      : fft_size_(fft_size), minimum_phase_(fft_size), noise_fft_(fft_size),
        inverse_(fft_size), log_amplitude_(fft_size / 2 + 1),
        response_(fft_size), periodic_(fft_size), dc_remover_(fft_size / 2) {
    double total = 0.0;
    const int half = fft_size / 2;
    for (int i = 0; i < half; ++i) {
      dc_remover_[i] =
          0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * (i + 1.0) / (half + 1));
      total += dc_remover_[i];
    }
    for (double &v : dc_remover_) v /= total;
  }

  // Response centred at fft_size / 2.
  const std::vector<double> &Render(const std::vector<double> &envelope,
                                    const std::vector<double> &ap,
                                    const Pulse &pulse, int noise_size,
                                    GaussianNoise &noise) {
    std::fill(response_.begin(), response_.end(), 0.0);
    const int half = fft_size_ / 2;
    const double scale = 1.0 / fft_size_;

    if (pulse.voiced) {
      for (int k = 0; k <= half; ++k)
        log_amplitude_[k] =
            0.5 * std::log(envelope[k] * (1.0 - ap[k]) + dsp::kSafeGuardMinimum);
      auto spectrum = minimum_phase_.Compute(log_amplitude_);
      auto target = inverse_.spectrum();
      const double coefficient =
          2.0 * std::numbers::pi * pulse.time_shift / fft_size_;
      for (int k = 0; k <= half; ++k)
        target[k] = spectrum[k] * std::polar(1.0, coefficient * k);
      inverse_.Execute();
      auto wave = inverse_.waveform();
      const double gain = std::sqrt(static_cast<double>(noise_size)) * scale;
      for (int i = 0; i < fft_size_; ++i)
        periodic_[i] = wave[(i + half) % fft_size_] * gain;
      double dc = 0.0;
      for (int i = half; i < fft_size_; ++i) dc += periodic_[i];
      for (int i = half; i < fft_size_; ++i)
        periodic_[i] -= dc * dc_remover_[i - half];
      for (int i = 0; i < fft_size_; ++i) response_[i] += periodic_[i];
    }

    auto noise_wave = noise_fft_.waveform();
    std::fill(noise_wave.begin(), noise_wave.end(), 0.0);
    double mean = 0.0;
    for (int i = 0; i < noise_size; ++i) {
      noise_wave[i] = noise.Next();
      mean += noise_wave[i];
    }
    mean /= std::max(1, noise_size);
    for (int i = 0; i < noise_size; ++i) noise_wave[i] -= mean;
    noise_fft_.Execute();
    auto noise_spectrum = noise_fft_.spectrum();
    for (int k = 0; k <= half; ++k) {
      const double a = pulse.voiced ? ap[k] : 1.0;
      log_amplitude_[k] =
          0.5 * std::log(envelope[k] * a + dsp::kSafeGuardMinimum);
    }
    auto shaping = minimum_phase_.Compute(log_amplitude_);
    auto target = inverse_.spectrum();
    for (int k = 0; k <= half; ++k) target[k] = shaping[k] * noise_spectrum[k];
    inverse_.Execute();
    auto wave = inverse_.waveform();
    for (int i = 0; i < fft_size_; ++i)
      response_[i] += wave[(i + half) % fft_size_] * scale;
    return response_;
  }

 private:
  int fft_size_;
  dsp::MinimumPhase minimum_phase_;
  ForwardRealFft noise_fft_;
  InverseRealFft inverse_;
  std::vector<double> log_amplitude_;
  std::vector<double> response_;
  std::vector<double> periodic_;
  std::vector<double> dc_remover_;
};

}  // namespace

AudioClip Synthesize(const F0Track &f0, const SpectralEnvelope &envelope,
                     const Aperiodicity &aperiodicity,
                     const SynthesisOptions &options) {
  if (envelope.frames() != f0.size() || aperiodicity.frames() != f0.size())
    throw Error(ErrorCode::kInconsistentFrames,
                "synthesis tracks disagree on frame count");
  if (aperiodicity.bins() != envelope.bins() ||
      envelope.bins() != static_cast<std::size_t>(envelope.fft_size / 2 + 1))
    throw Error(ErrorCode::kInconsistentFrames,
                "envelope and aperiodicity bin counts disagree");
  const int fs = envelope.sample_rate;
  AudioClip out;
  out.sample_rate = fs;
  if (f0.size() == 0) return out;

  const std::size_t length = static_cast<std::size_t>(
      std::lround(f0.size() * f0.frame_period_ms * fs / 1000.0));
  out.samples.assign(length, 0.0);
  auto pulses = PulseLocations(f0, fs, length, options.unvoiced_pulse_hz);

  const int fft_size = envelope.fft_size;
  PulseRenderer renderer(fft_size);
  GaussianNoise noise(options.seed);
  std::vector<double> env, ap;
  for (std::size_t p = 0; p < pulses.size(); ++p) {
    const long next = p + 1 < pulses.size() ? pulses[p + 1].index
                                            : static_cast<long>(length);
    const int noise_size =
        static_cast<int>(std::clamp(next - pulses[p].index, 1L,
                                    static_cast<long>(fft_size)));
    const double position =
        pulses[p].index * 1000.0 / (fs * f0.frame_period_ms);
    FrameAt(envelope.values, position, env);
    FrameAt(aperiodicity.values, position, ap);
    const auto &response =
        renderer.Render(env, ap, pulses[p], noise_size, noise);
    const long offset = pulses[p].index - fft_size / 2 + 1;
    for (int j = 0; j < fft_size; ++j) {
      const long idx = offset + j;
      if (idx >= 0 && idx < static_cast<long>(length))
        out.samples[idx] += response[j];
    }
  }
  return out;
}

}  // namespace voxsan
