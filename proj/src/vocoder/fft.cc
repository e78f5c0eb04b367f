// src/vocoder/fft.cc

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

#include "voxsan/vocoder/fft.h"

#include <fftw3.h>

#include <algorithm>
#include <mutex>

#include "voxsan/common/error.h"

namespace voxsan {

namespace {

std::mutex &PlannerMutex() {
  static std::mutex m;
  return m;
}

}  // namespace

ForwardRealFft::ForwardRealFft(int size) : size_(size) {
  if (size < 2) throw Error(ErrorCode::kInvalidArgument, "fft size < 2");
  std::lock_guard lock(PlannerMutex());
  waveform_ = fftw_alloc_real(size);
  spectrum_ = reinterpret_cast<std::complex<double> *>(
      fftw_alloc_complex(size / 2 + 1));
  plan_ = fftw_plan_dft_r2c_1d(size, waveform_,
                               reinterpret_cast<fftw_complex *>(spectrum_),
                               FFTW_ESTIMATE);
  std::fill_n(waveform_, size, 0.0);
}

ForwardRealFft::~ForwardRealFft() {
  std::lock_guard lock(PlannerMutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_));
  fftw_free(waveform_);
  fftw_free(spectrum_);
}

void ForwardRealFft::Execute() { fftw_execute(static_cast<fftw_plan>(plan_)); }

InverseRealFft::InverseRealFft(int size) : size_(size) {
  if (size < 2) throw Error(ErrorCode::kInvalidArgument, "fft size < 2");
  std::lock_guard lock(PlannerMutex());
  waveform_ = fftw_alloc_real(size);
  spectrum_ = reinterpret_cast<std::complex<double> *>(
      fftw_alloc_complex(size / 2 + 1));
  plan_ = fftw_plan_dft_c2r_1d(size,
                               reinterpret_cast<fftw_complex *>(spectrum_),
                               waveform_, FFTW_ESTIMATE);
  std::fill_n(waveform_, size, 0.0);
}

InverseRealFft::~InverseRealFft() {
  std::lock_guard lock(PlannerMutex());
  fftw_destroy_plan(static_cast<fftw_plan>(plan_));
  fftw_free(waveform_);
  fftw_free(spectrum_);
}

// c2r overwrites its input; callers refill the spectrum before each call.
void InverseRealFft::Execute() { fftw_execute(static_cast<fftw_plan>(plan_)); }

int NextPowerOfTwo(int n) {
  int p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace voxsan
