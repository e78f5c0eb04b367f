// include/voxsan/corpus/audio.h

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

#ifndef VOXSAN_CORPUS_AUDIO_H_
#define VOXSAN_CORPUS_AUDIO_H_

#include <string>
#include <vector>

namespace voxsan {

// Mono waveform with amplitudes nominally in [-1, 1].
struct AudioClip {
  std::vector<double> samples;
  int sample_rate = 16000;
  std::string source_path;

  std::size_t size() const { return samples.size(); }
  double DurationSeconds() const {
    return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate
                           : 0.0;
  }
};

double Rms(const AudioClip &clip);
double PeakAbs(const AudioClip &clip);

// Scales the clip so that its peak magnitude equals `peak`. Silent clips are
// returned unchanged.
AudioClip PeakNormalize(AudioClip clip, double peak = 0.99);

}  // namespace voxsan

#endif  // VOXSAN_CORPUS_AUDIO_H_
