// src/vocoder/dsp.cc

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

#include "voxsan/vocoder/dsp.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace voxsan::dsp {

std::vector<double> Interp1(std::span<const double> x,
                            std::span<const double> y,
                            std::span<const double> xi) {
  std::vector<double> out(xi.size(), 0.0);
  const std::size_t n = x.size();
  if (n == 0) return out;
  if (n == 1) {
    std::fill(out.begin(), out.end(), y[0]);
    return out;
  }
  for (std::size_t i = 0; i < xi.size(); ++i) {
    auto it = std::upper_bound(x.begin(), x.end(), xi[i]);
    std::size_t k = static_cast<std::size_t>(it - x.begin());
    k = std::clamp<std::size_t>(k, 1, n - 1);
    const double x0 = x[k - 1], x1 = x[k];
    const double t = (x1 == x0) ? 0.0 : (xi[i] - x0) / (x1 - x0);
    out[i] = y[k - 1] + t * (y[k] - y[k - 1]);
  }
  return out;
}

std::vector<double> Interp1Uniform(double x0, double dx,
                                   std::span<const double> y,
                                   std::span<const double> xi) {
  std::vector<double> out(xi.size(), 0.0);
  const long n = static_cast<long>(y.size());
  if (n == 0) return out;
  if (n == 1) {
    std::fill(out.begin(), out.end(), y[0]);
    return out;
  }
  for (std::size_t i = 0; i < xi.size(); ++i) {
    double pos = (xi[i] - x0) / dx;
    long k = static_cast<long>(std::floor(pos));
    k = std::clamp(k, 0L, n - 2);
    double t = pos - static_cast<double>(k);
    out[i] = y[k] + t * (y[k + 1] - y[k]);
  }
  return out;
}

std::vector<double> LinearSmoothing(std::span<const double> half_spectrum,
                                    double width, int fs, int fft_size) {
  const int half = fft_size / 2;
  const int boundary = static_cast<int>(width * fft_size / fs) + 1;
  const int mirrored_length = half + boundary * 2 + 1;
  std::vector<double> mirrored(mirrored_length);
  for (int i = 0; i < boundary; ++i)
    mirrored[i] = half_spectrum[boundary - i];
  for (int i = boundary; i < half + boundary; ++i)
    mirrored[i] = half_spectrum[i - boundary];
  for (int i = half + boundary; i < mirrored_length; ++i)
    mirrored[i] = half_spectrum[half - (i - (half + boundary))];

  const double df = static_cast<double>(fs) / fft_size;
  std::vector<double> cumulative(mirrored_length);
  cumulative[0] = mirrored[0] * df;
  for (int i = 1; i < mirrored_length; ++i)
    cumulative[i] = cumulative[i - 1] + mirrored[i] * df;

  std::vector<double> low_axis(half + 1), high_axis(half + 1);
  for (int i = 0; i <= half; ++i) {
    low_axis[i] = i * df - width / 2.0;
    high_axis[i] = low_axis[i] + width;
  }
  const double origin = -(boundary - 0.5) * df;
  auto low = Interp1Uniform(origin, df, cumulative, low_axis);
  auto high = Interp1Uniform(origin, df, cumulative, high_axis);
  std::vector<double> out(half + 1);
  for (int i = 0; i <= half; ++i) out[i] = (high[i] - low[i]) / width;
  return out;
}

std::vector<double> DcCorrection(std::span<const double> half_spectrum,
                                 double f0, int fs, int fft_size) {
  std::vector<double> out(half_spectrum.begin(), half_spectrum.end());
  const double df = static_cast<double>(fs) / fft_size;
  const int upper = std::min<int>(2 + static_cast<int>(f0 * fft_size / fs),
                                  static_cast<int>(half_spectrum.size()) - 1);
  std::vector<double> axis(upper);
  for (int i = 0; i < upper; ++i) axis[i] = i * df;
  // input[k] sits at frequency f0 - k * df on the mirrored axis; that axis
  // decreases, so reverse it for interpolation.
  const int span_length = upper + 1;
  std::vector<double> mirrored_x(span_length), mirrored_y(span_length);
  for (int k = 0; k < span_length; ++k) {
    mirrored_x[span_length - 1 - k] = f0 - k * df;
    mirrored_y[span_length - 1 - k] = half_spectrum[k];
  }
  std::vector<double> query(axis.begin(), axis.end() - 1);
  auto replica = Interp1(mirrored_x, mirrored_y, query);
  for (int i = 0; i < upper - 1; ++i) out[i] = half_spectrum[i] + replica[i];
  return out;
}

std::vector<double> NuttallWindow(int length) {
  std::vector<double> w(length);
  for (int i = 0; i < length; ++i) {
    double t = length > 1 ? static_cast<double>(i) / (length - 1) : 0.0;
    w[i] = 0.355768 - 0.487396 * std::cos(2.0 * std::numbers::pi * t) +
           0.144232 * std::cos(4.0 * std::numbers::pi * t) -
           0.012604 * std::cos(6.0 * std::numbers::pi * t);
  }
  return w;
}

MinimumPhase::MinimumPhase(int fft_size)
    : fft_size_(fft_size),
      forward_(fft_size),
      inverse_(fft_size),
      result_(fft_size / 2 + 1) {}

std::span<const std::complex<double>> MinimumPhase::Compute(
    std::span<const double> log_amplitude) {
  const int half = fft_size_ / 2;
  // Real cepstrum of the symmetric log spectrum.
  auto spec = inverse_.spectrum();
  for (int i = 0; i <= half; ++i) spec[i] = {log_amplitude[i], 0.0};
  inverse_.Execute();
  auto cep = inverse_.waveform();
  auto folded = forward_.waveform();
  const double scale = 1.0 / fft_size_;
  folded[0] = cep[0] * scale;
  for (int i = 1; i < half; ++i) folded[i] = 2.0 * cep[i] * scale;
  folded[half] = cep[half] * scale;
  for (int i = half + 1; i < fft_size_; ++i) folded[i] = 0.0;
  forward_.Execute();
  auto out = forward_.spectrum();
  for (int i = 0; i <= half; ++i) result_[i] = std::exp(out[i]);
  return result_;
}

}  // namespace voxsan::dsp
