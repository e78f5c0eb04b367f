// include/voxsan/vocoder/fft.h

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

#ifndef VOXSAN_VOCODER_FFT_H_
#define VOXSAN_VOCODER_FFT_H_

#include <complex>
#include <span>

namespace voxsan {

// RAII wrappers around FFTW r2c / c2r plans that own their buffers. Plan
// creation is serialized internally because the FFTW planner is not
// re-entrant; execution is safe from any thread once the object exists.
class ForwardRealFft {
 public:
  explicit ForwardRealFft(int size);
  ~ForwardRealFft();
  ForwardRealFft(const ForwardRealFft &) = delete;
  ForwardRealFft &operator=(const ForwardRealFft &) = delete;

  int size() const { return size_; }
  std::span<double> waveform() { return {waveform_, std::size_t(size_)}; }
  std::span<std::complex<double>> spectrum() {
    return {spectrum_, std::size_t(size_ / 2 + 1)};
  }
  void Execute();

 private:
  int size_;
  double *waveform_;
  std::complex<double> *spectrum_;
  void *plan_;
};

// Unnormalized inverse: Execute() on a forward spectrum yields size * input.
class InverseRealFft {
 public:
  explicit InverseRealFft(int size);
  ~InverseRealFft();
  InverseRealFft(const InverseRealFft &) = delete;
  InverseRealFft &operator=(const InverseRealFft &) = delete;

  int size() const { return size_; }
  std::span<std::complex<double>> spectrum() {
    return {spectrum_, std::size_t(size_ / 2 + 1)};
  }
  std::span<double> waveform() { return {waveform_, std::size_t(size_)}; }
  void Execute();

 private:
  int size_;
  double *waveform_;
  std::complex<double> *spectrum_;
  void *plan_;
};

int NextPowerOfTwo(int n);

}  // namespace voxsan

#endif  // VOXSAN_VOCODER_FFT_H_
