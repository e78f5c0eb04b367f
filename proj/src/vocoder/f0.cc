// src/vocoder/f0.cc

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

#include "voxsan/vocoder/f0.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "voxsan/common/error.h"
#include "voxsan/vocoder/dsp.h"
#include "voxsan/vocoder/fft.h"

namespace voxsan {

namespace {

constexpr double kMaximumDeviation = 100000.0;

// Interval measurements from one event type: an F0 value located at the
// midpoint between consecutive events.
struct IntervalSeries {
  std::vector<double> locations;
  std::vector<double> values;
};

//-----------------------------------------------------------------------------
// Spectrum of the DC-removed signal, high-passed at 50 Hz, zero padded to
// fft_size.
//-----------------------------------------------------------------------------
std::vector<std::complex<double>> GetSpectrumForEstimation(
    const std::vector<double> &x, int fs, int fft_size) {
  ForwardRealFft fft(fft_size);
  auto y = fft.waveform();
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(x.size());
  std::fill(y.begin(), y.end(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] - mean;
  fft.Execute();
  std::vector<std::complex<double>> spectrum(fft.spectrum().begin(),
                                             fft.spectrum().end());

  // Low-cut filter: delta minus a Hanning-shaped low-pass, centred at 0.
  const int n = static_cast<int>(std::lround(fs / 50.0)) * 2 + 1;
  std::fill(y.begin(), y.end(), 0.0);
  std::vector<double> h(n);
  double sum = 0.0;
  for (int i = 1; i <= n; ++i) {
    h[i - 1] = 0.5 - 0.5 * std::cos(i * 2.0 * std::numbers::pi / (n + 1));
    sum += h[i - 1];
  }
  const int centre = (n - 1) / 2;
  for (int i = 0; i < n; ++i) {
    int idx = i - centre;
    if (idx < 0) idx += fft_size;
    y[idx] = -h[i] / sum;
  }
  y[0] += 1.0;
  fft.Execute();
  auto filter = fft.spectrum();
  for (std::size_t i = 0; i < spectrum.size(); ++i) spectrum[i] *= filter[i];
  return spectrum;
}

//-----------------------------------------------------------------------------
// Convolution with a Nuttall low-pass whose length sets the cutoff near
// boundary_f0; the filter delay is compensated.
//-----------------------------------------------------------------------------
std::vector<double> GetFilteredSignal(
    int half_average_length, int fft_size,
    const std::vector<std::complex<double>> &spectrum, std::size_t length) {
  ForwardRealFft forward(fft_size);
  auto w = forward.waveform();
  std::fill(w.begin(), w.end(), 0.0);
  auto window = dsp::NuttallWindow(half_average_length * 4);
  std::copy(window.begin(), window.end(), w.begin());
  forward.Execute();

  InverseRealFft inverse(fft_size);
  auto out_spec = inverse.spectrum();
  auto lp = forward.spectrum();
  for (std::size_t i = 0; i < out_spec.size(); ++i)
    out_spec[i] = spectrum[i] * lp[i];
  inverse.Execute();
  auto filtered = inverse.waveform();
  const int bias = half_average_length * 2;
  std::vector<double> result(length);
  for (std::size_t i = 0; i < length; ++i)
    result[i] = filtered[i + bias] / fft_size;
  return result;
}

//-----------------------------------------------------------------------------
// Intervals between positive-to-negative zero crossings, refined by linear
// interpolation of the crossing point.
//-----------------------------------------------------------------------------
IntervalSeries ZeroCrossingEngine(const std::vector<double> &signal,
                                  std::size_t length, double fs) {
  std::vector<double> edges;
  for (std::size_t i = 0; i + 1 < length; ++i) {
    if (0.0 < signal[i] && signal[i + 1] <= 0.0) {
      double k = static_cast<double>(i + 1);
      edges.push_back(k - signal[i] / (signal[i + 1] - signal[i]));
    }
  }
  IntervalSeries s;
  if (edges.size() < 2) return s;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    s.values.push_back(fs / (edges[i + 1] - edges[i]));
    s.locations.push_back((edges[i] + edges[i + 1]) / 2.0 / fs);
  }
  return s;
}

//-----------------------------------------------------------------------------
// Candidate F0 and its spread for one band: the four event types (negative
// and positive zero crossings, peaks, dips) are interpolated onto the frame
// grid and averaged.
//-----------------------------------------------------------------------------
void GetBandCandidates(std::vector<double> filtered, double fs,
                       double boundary_f0, const F0Options &options,
                       const std::vector<double> &time_axis,
                       std::vector<double> *candidates,
                       std::vector<double> *deviations) {
  const std::size_t n = filtered.size();
  std::array<IntervalSeries, 4> series;
  series[0] = ZeroCrossingEngine(filtered, n, fs);
  for (double &v : filtered) v = -v;
  series[1] = ZeroCrossingEngine(filtered, n, fs);
  for (std::size_t i = 0; i + 1 < n; ++i)
    filtered[i] = filtered[i] - filtered[i + 1];
  series[2] = ZeroCrossingEngine(filtered, n - 1, fs);
  for (std::size_t i = 0; i + 1 < n; ++i) filtered[i] = -filtered[i];
  series[3] = ZeroCrossingEngine(filtered, n - 1, fs);

  const std::size_t frames = time_axis.size();
  candidates->assign(frames, 0.0);
  deviations->assign(frames, kMaximumDeviation);
  for (const auto &s : series)
    if (s.values.size() < 2) return;

  std::array<std::vector<double>, 4> interpolated;
  for (int k = 0; k < 4; ++k)
    interpolated[k] = dsp::Interp1(series[k].locations, series[k].values,
                                   time_axis);
  for (std::size_t i = 0; i < frames; ++i) {
    double mean = 0.0;
    for (int k = 0; k < 4; ++k) mean += interpolated[k][i];
    mean /= 4.0;
    double ss = 0.0;
    for (int k = 0; k < 4; ++k)
      ss += (interpolated[k][i] - mean) * (interpolated[k][i] - mean);
    double deviation = std::sqrt(ss / 3.0);
    if (mean > boundary_f0 || mean < boundary_f0 / 2.0 ||
        mean > options.ceil_hz || mean < options.floor_hz) {
      continue;
    }
    (*candidates)[i] = mean;
    (*deviations)[i] = deviation;
  }
}

double SelectBestF0(double current_f0, double past_f0,
                    const std::vector<std::vector<double>> &candidates,
                    std::size_t target, double allowed_range) {
  const double reference = (current_f0 * 3.0 - past_f0) / 2.0;
  double best = candidates[0][target];
  double best_error = std::fabs(reference - best);
  for (std::size_t b = 1; b < candidates.size(); ++b) {
    double error = std::fabs(reference - candidates[b][target]);
    if (error < best_error) {
      best_error = error;
      best = candidates[b][target];
    }
  }
  if (std::fabs(1.0 - best / reference) > allowed_range) return 0.0;
  return best;
}

//-----------------------------------------------------------------------------
// Contour repair: (1) drop jumps larger than allowed_range, (2) drop voiced
// runs shorter than the minimum voice range, (3)/(4) extend voiced runs
// forward and backward by picking the candidate closest to the linear
// prediction.
//-----------------------------------------------------------------------------
std::vector<double> FixF0Contour(
    const std::vector<double> &best, double frame_period_ms, double floor_hz,
    double allowed_range,
    const std::vector<std::vector<double>> &candidates) {
  const int length = static_cast<int>(best.size());
  const int voice_range_minimum =
      static_cast<int>(0.5 + 1000.0 / frame_period_ms / floor_hz) * 2 + 1;
  std::vector<double> step1(length, 0.0);
  if (length <= 2 * voice_range_minimum) return step1;

  std::vector<double> base(length, 0.0);
  for (int i = voice_range_minimum; i < length - voice_range_minimum; ++i)
    base[i] = best[i];
  for (int i = voice_range_minimum; i < length; ++i) {
    double jump = std::fabs((base[i] - base[i - 1]) /
                            (dsp::kSafeGuardMinimum + base[i]));
    step1[i] = jump < allowed_range ? base[i] : 0.0;
  }

  std::vector<double> step2 = step1;
  const int centre = (voice_range_minimum - 1) / 2;
  for (int i = centre; i < length - centre; ++i) {
    for (int j = -centre; j <= centre; ++j) {
      if (step1[i + j] == 0.0) {
        step2[i] = 0.0;
        break;
      }
    }
  }

  std::vector<int> onsets, offsets;
  for (int i = 1; i < length; ++i) {
    if (step2[i] == 0.0 && step2[i - 1] != 0.0) offsets.push_back(i - 1);
    else if (step2[i - 1] == 0.0 && step2[i] != 0.0) onsets.push_back(i);
  }

  std::vector<double> step3 = step2;
  for (std::size_t k = 0; k < offsets.size(); ++k) {
    int limit = k + 1 == offsets.size() ? length - 1 : offsets[k + 1];
    for (int j = offsets[k]; j < limit; ++j) {
      if (j < 1) continue;
      step3[j + 1] = SelectBestF0(step3[j], step3[j - 1], candidates, j + 1,
                                  allowed_range);
      if (step3[j + 1] == 0.0) break;
    }
  }

  std::vector<double> step4 = step3;
  for (int k = static_cast<int>(onsets.size()) - 1; k >= 0; --k) {
    int limit = k == 0 ? 1 : onsets[k - 1];
    for (int j = onsets[k]; j > limit; --j) {
      if (j + 1 >= length) continue;
      step4[j - 1] = SelectBestF0(step4[j], step4[j + 1], candidates, j - 1,
                                  allowed_range);
      if (step4[j - 1] == 0.0) break;
    }
  }
  return step4;
}

//-----------------------------------------------------------------------------
// Normalized correlation between the waveform around `centre` and itself
// delayed by one period (fractional delays by linear interpolation).
//-----------------------------------------------------------------------------
double PeriodicCorrelation(const std::vector<double> &x, double centre,
                           double period, double half_window) {
  const long n = static_cast<long>(x.size());
  long begin = static_cast<long>(std::floor(centre - half_window));
  long end = static_cast<long>(std::ceil(centre + half_window - period));
  begin = std::max(begin, 0L);
  const long lag = static_cast<long>(std::floor(period));
  const double frac = period - static_cast<double>(lag);
  end = std::min(end, n - lag - 2);
  if (end - begin < 4) return 0.0;
  double xy = 0.0, xx = 0.0, yy = 0.0;
  for (long i = begin; i < end; ++i) {
    double a = x[i];
    double b = (1.0 - frac) * x[i + lag] + frac * x[i + lag + 1];
    xy += a * b;
    xx += a * a;
    yy += b * b;
  }
  if (xx <= 1e-20 || yy <= 1e-20) return 0.0;
  return xy / std::sqrt(xx * yy);
}

}  // namespace

std::size_t F0Track::VoicedCount() const {
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [](double v) {
        return v > 0.0;
      }));
}

std::size_t FrameCount(std::size_t num_samples, int sample_rate,
                       double frame_period_ms) {
  double frames = static_cast<double>(num_samples) * 1000.0 /
                  (static_cast<double>(sample_rate) * frame_period_ms);
  return static_cast<std::size_t>(std::floor(frames + 1e-9)) + 1;
}

F0Track EstimateF0(const AudioClip &clip, const F0Options &options) {
  if (clip.sample_rate < 8000)
    throw Error(ErrorCode::kInvalidArgument,
                "F0 estimation needs a sample rate of at least 8 kHz");
  if (!(options.floor_hz > 0.0 && options.floor_hz < options.ceil_hz))
    throw Error(ErrorCode::kInvalidArgument, "F0 floor must be below ceil");
  if (!(options.frame_period_ms > 0.0))
    throw Error(ErrorCode::kInvalidArgument, "frame period must be positive");
  const double fs = clip.sample_rate;
  const double min_length = 2.0 * fs / options.floor_hz;
  if (static_cast<double>(clip.samples.size()) < min_length)
    throw Error(ErrorCode::kClipTooShort,
                std::to_string(clip.samples.size()) +
                    " samples is under two periods of the F0 floor");

  F0Track track;
  track.frame_period_ms = options.frame_period_ms;
  track.floor_hz = options.floor_hz;
  track.ceil_hz = options.ceil_hz;
  const std::size_t frames =
      FrameCount(clip.samples.size(), clip.sample_rate,
                 options.frame_period_ms);
  track.values.assign(frames, 0.0);

  const int bands = 1 + static_cast<int>(std::log2(options.ceil_hz /
                                                   options.floor_hz) *
                                         options.channels_in_octave);
  std::vector<double> boundaries(bands);
  for (int i = 0; i < bands; ++i)
    boundaries[i] = options.floor_hz *
                    std::pow(2.0, (i + 1) / options.channels_in_octave);

  const std::size_t length = clip.samples.size();
  const int fft_size = NextPowerOfTwo(static_cast<int>(
      length + 4 * static_cast<int>(1.0 + fs / boundaries[0] / 2.0)));
  auto spectrum = GetSpectrumForEstimation(clip.samples, clip.sample_rate,
                                           fft_size);

  std::vector<double> time_axis(frames);
  for (std::size_t i = 0; i < frames; ++i)
    time_axis[i] = i * options.frame_period_ms / 1000.0;

  std::vector<std::vector<double>> candidates(bands), stability(bands);
  for (int b = 0; b < bands; ++b) {
    auto filtered = GetFilteredSignal(
        static_cast<int>(std::lround(fs / boundaries[b] / 2.0)), fft_size,
        spectrum, length);
    std::vector<double> deviations;
    GetBandCandidates(std::move(filtered), fs, boundaries[b], options,
                      time_axis, &candidates[b], &deviations);
    stability[b].resize(frames);
    for (std::size_t i = 0; i < frames; ++i)
      stability[b][i] =
          deviations[i] / (candidates[b][i] + dsp::kSafeGuardMinimum);
  }

  std::vector<double> best(frames, 0.0);
  for (std::size_t i = 0; i < frames; ++i) {
    double lowest = stability[0][i];
    best[i] = candidates[0][i];
    for (int b = 1; b < bands; ++b) {
      if (lowest > stability[b][i]) {
        lowest = stability[b][i];
        best[i] = candidates[b][i];
      }
    }
  }

  auto contour = FixF0Contour(best, options.frame_period_ms, options.floor_hz,
                              options.allowed_range, candidates);

  for (std::size_t i = 0; i < frames; ++i) {
    double f0 = contour[i];
    if (f0 <= 0.0) continue;
    const double period = fs / f0;
    const double centre = time_axis[i] * fs;
    const double half_window = std::max(1.5 * period, 0.015 * fs);
    double r = PeriodicCorrelation(clip.samples, centre, period, half_window);
    if (r >= options.voicing_threshold) track.values[i] = f0;
  }
  return track;
}

}  // namespace voxsan
