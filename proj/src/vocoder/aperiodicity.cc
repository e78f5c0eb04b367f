// src/vocoder/aperiodicity.cc

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

#include "voxsan/vocoder/aperiodicity.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "voxsan/common/error.h"
#include "voxsan/vocoder/dsp.h"
#include "voxsan/vocoder/fft.h"

namespace voxsan {

namespace {

constexpr double kFloorDb = -60.0;
constexpr double kRelativePowerFloor = 1e-8;

enum class WindowShape { kHanning, kBlackman };

class AperiodicityWorkspace {
 public:
  AperiodicityWorkspace(int fs, int fft_size, double band_width,
                        int band_count)
      : fs_(fs), fft_size_(fft_size), band_width_(band_width),
        band_count_(band_count), forward_(fft_size) {
    const int window_length =
        static_cast<int>(band_width * fft_size / fs) * 2 + 1;
    band_window_ = dsp::NuttallWindow(window_length);
  }

  // Band aperiodicity in dB, one value per coarse band.
  std::vector<double> Estimate(const std::vector<double> &x, double f0,
                               double position) {
    auto centroid_a = Centroid(x, f0, position - 0.25 / f0);
    auto centroid_b = Centroid(x, f0, position + 0.25 / f0);
    std::vector<double> static_centroid(centroid_a.size());
    for (std::size_t i = 0; i < static_centroid.size(); ++i)
      static_centroid[i] = centroid_a[i] + centroid_b[i];
    static_centroid = dsp::DcCorrection(static_centroid, f0, fs_, fft_size_);

    auto power = SmoothedPower(x, f0, position);
    // Bins far below the frame's spectral peak carry no usable phase; the
    // floor drives their group delay to zero, which reads as periodic.
    const double floor =
        kRelativePowerFloor * *std::max_element(power.begin(), power.end()) +
        dsp::kSafeGuardMinimum;
    std::vector<double> group_delay(power.size());
    for (std::size_t i = 0; i < power.size(); ++i)
      group_delay[i] = static_centroid[i] / (power[i] + floor);
    group_delay = dsp::LinearSmoothing(group_delay, f0 / 2.0, fs_, fft_size_);
    auto trend = dsp::LinearSmoothing(group_delay, f0, fs_, fft_size_);
    for (std::size_t i = 0; i < group_delay.size(); ++i)
      group_delay[i] -= trend[i];

    auto bands = CoarseAperiodicity(group_delay);
    for (double &b : bands) b = std::min(0.0, b + (f0 - 100.0) / 50.0);
    return bands;
  }

 private:
  // Windowed, DC-compensated segment written into the FFT buffer.
  void Window(const std::vector<double> &x, double f0, double position,
              WindowShape shape) {
    const double ratio = 4.0;
    const int half = static_cast<int>(std::lround(ratio * fs_ / f0 / 2.0));
    const int length = 2 * half + 1;
    const long origin = std::lround(position * fs_ + 0.001);
    const long last = static_cast<long>(x.size()) - 1;
    auto wave = forward_.waveform();
    std::fill(wave.begin(), wave.end(), 0.0);
    window_.resize(length);
    double weighted = 0.0, total = 0.0;
    for (int i = 0; i < length; ++i) {
      const double t = 2.0 * (i - half) / ratio / fs_;
      const double phase = std::numbers::pi * t * f0;
      window_[i] = shape == WindowShape::kHanning
                       ? 0.5 * std::cos(phase) + 0.5
                       : 0.42 + 0.5 * std::cos(phase) +
                             0.08 * std::cos(2.0 * phase);
      const long idx = std::clamp(origin + i - half, 0L, last);
      wave[i] = x[idx] * window_[i];
      weighted += wave[i];
      total += window_[i];
    }
    const double coefficient = weighted / total;
    for (int i = 0; i < length; ++i) wave[i] -= window_[i] * coefficient;
  }

  std::vector<double> Centroid(const std::vector<double> &x, double f0,
                               double position) {
    Window(x, f0, position, WindowShape::kBlackman);
    auto wave = forward_.waveform();
    const int limit =
        std::min<int>(static_cast<int>(std::lround(2.0 * fs_ / f0)) * 2 + 1,
                      fft_size_);
    double energy = 0.0;
    for (int i = 0; i < limit; ++i) energy += wave[i] * wave[i];
    const double norm = energy > 0.0 ? 1.0 / std::sqrt(energy) : 0.0;
    for (int i = 0; i < fft_size_; ++i) wave[i] *= norm;
    forward_.Execute();
    std::vector<std::complex<double>> plain(forward_.spectrum().begin(),
                                            forward_.spectrum().end());
    for (int i = 0; i < fft_size_; ++i) wave[i] *= i + 1.0;
    forward_.Execute();
    auto weighted = forward_.spectrum();
    std::vector<double> centroid(plain.size());
    for (std::size_t i = 0; i < plain.size(); ++i)
      centroid[i] = weighted[i].real() * plain[i].real() +
                    weighted[i].imag() * plain[i].imag();
    return centroid;
  }

  std::vector<double> SmoothedPower(const std::vector<double> &x, double f0,
                                    double position) {
    Window(x, f0, position, WindowShape::kHanning);
    forward_.Execute();
    auto spec = forward_.spectrum();
    std::vector<double> power(spec.size());
    for (std::size_t i = 0; i < power.size(); ++i) power[i] = std::norm(spec[i]);
    power = dsp::DcCorrection(power, f0, fs_, fft_size_);
    return dsp::LinearSmoothing(power, f0, fs_, fft_size_);
  }

  std::vector<double> CoarseAperiodicity(
      const std::vector<double> &group_delay) {
    const int window_length = static_cast<int>(band_window_.size());
    const int half_window = window_length / 2;
    const int boundary = static_cast<int>(
        std::lround(fft_size_ * 8.0 / window_length));
    const int half = fft_size_ / 2;
    std::vector<double> bands(band_count_);
    std::vector<double> power(half + 1);
    for (int b = 0; b < band_count_; ++b) {
      auto wave = forward_.waveform();
      std::fill(wave.begin(), wave.end(), 0.0);
      const int centre =
          static_cast<int>(band_width_ * (b + 1) * fft_size_ / fs_);
      for (int j = 0; j < window_length; ++j) {
        int idx = std::clamp(centre - half_window + j, 0, half);
        wave[j] = group_delay[idx] * band_window_[j];
      }
      forward_.Execute();
      auto spec = forward_.spectrum();
      for (int j = 0; j <= half; ++j) power[j] = std::norm(spec[j]);
      std::sort(power.begin(), power.end());
      for (int j = 1; j <= half; ++j) power[j] += power[j - 1];
      const double total = power[half];
      const double residual = power[std::max(0, half - boundary - 1)];
      bands[b] = total > 0.0 && residual > 0.0
                     ? 10.0 * std::log10(residual / total)
                     : kFloorDb;
      bands[b] = std::max(bands[b], kFloorDb);
    }
    return bands;
  }

  int fs_;
  int fft_size_;
  double band_width_;
  int band_count_;
  ForwardRealFft forward_;
  std::vector<double> band_window_;
  std::vector<double> window_;
};

}  // namespace

int CoarseBandCount(int sample_rate, const AperiodicityOptions &options) {
  double usable = std::min(options.upper_limit_hz,
                           sample_rate / 2.0 - options.band_width_hz);
  return std::max(0, static_cast<int>(usable / options.band_width_hz));
}

Aperiodicity EstimateAperiodicity(const AudioClip &clip, const F0Track &f0,
                                  const AperiodicityOptions &options) {
  const std::size_t expected =
      FrameCount(clip.samples.size(), clip.sample_rate, f0.frame_period_ms);
  if (f0.size() != expected)
    throw Error(ErrorCode::kInconsistentFrames,
                "F0 track has " + std::to_string(f0.size()) +
                    " frames, clip implies " + std::to_string(expected));
  if (clip.samples.empty())
    throw Error(ErrorCode::kInvalidArgument, "empty clip");

  const int bins = options.fft_size / 2 + 1;
  Aperiodicity ap;
  ap.values = Matrix(f0.size(), bins, 1.0);
  const int band_count = CoarseBandCount(clip.sample_rate, options);
  if (band_count == 0 || f0.VoicedCount() == 0) return ap;

  const int analysis_fft = NextPowerOfTwo(
      static_cast<int>(4.0 * clip.sample_rate / options.min_f0_hz + 1.0) + 1);
  AperiodicityWorkspace workspace(clip.sample_rate, analysis_fft,
                                  options.band_width_hz, band_count);

  // Interpolation anchors in dB: a floor at DC, the band centres, and the
  // last band held flat up to Nyquist.
  std::vector<double> anchor_hz(band_count + 2), anchor_db(band_count + 2);
  anchor_hz[0] = 0.0;
  for (int b = 0; b < band_count; ++b)
    anchor_hz[b + 1] = options.band_width_hz * (b + 1);
  anchor_hz[band_count + 1] = clip.sample_rate / 2.0;
  std::vector<double> bin_hz(bins);
  for (int k = 0; k < bins; ++k)
    bin_hz[k] = static_cast<double>(k) * clip.sample_rate / options.fft_size;

  for (std::size_t i = 0; i < f0.size(); ++i) {
    if (f0.values[i] <= 0.0) continue;
    const double current = std::max(options.min_f0_hz, f0.values[i]);
    auto bands = workspace.Estimate(clip.samples, current,
                                    i * f0.frame_period_ms / 1000.0);
    anchor_db[0] = kFloorDb;
    for (int b = 0; b < band_count; ++b) anchor_db[b + 1] = bands[b];
    anchor_db[band_count + 1] = bands[band_count - 1];
    auto db = dsp::Interp1(anchor_hz, anchor_db, bin_hz);
    auto row = ap.values.row(i);
    for (int k = 0; k < bins; ++k)
      row[k] = std::clamp(std::pow(10.0, db[k] / 10.0), 0.0, 1.0);
  }
  return ap;
}

}  // namespace voxsan
