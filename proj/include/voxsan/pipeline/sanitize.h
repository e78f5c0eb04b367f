// include/voxsan/pipeline/sanitize.h

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

#ifndef VOXSAN_PIPELINE_SANITIZE_H_
#define VOXSAN_PIPELINE_SANITIZE_H_

#include <string>
#include <vector>

#include "voxsan/corpus/audio.h"
#include "voxsan/corpus/manifest.h"
#include "voxsan/gan/checkpoint.h"
#include "voxsan/pipeline/config.h"
#include "voxsan/vocoder/vocoder.h"

namespace voxsan {

struct SanitizeConfig {
  std::string checkpoint_path;
  Direction direction = Direction::kXToY;
  AnalysisConfig analysis;
  std::string output_dir;
  int threads = 1;
  bool peak_normalize = false;
  bool dump_features = false;  // writes <output>.vxft next to each WAV
  bool differential_envelope = true;
  SynthesisOptions synthesis;
};

// Maps an mcep track through G (X to Y) or F (Y to X): normalize with the
// source statistics, convert non-overlapping windows of the model's segment
// length (the last one reflect-padded, then trimmed), denormalize with the
// target statistics. Throws kShapeMismatch when the order does not match
// the checkpoint.
McepTrack ConvertMcep(const McepTrack &mcep, const gan::Checkpoint &ckpt,
                      Direction direction);

// Spectral envelope through ConvertMcep, F0 through the log-F0 statistics,
// aperiodicity untouched.
// With `differential` set, the change the generator makes to the mcep
// envelope is applied as a gain to the analyzed envelope, so detail above
// the mcep order survives and an identity model reproduces plain
// resynthesis. Otherwise the envelope is rebuilt from the converted mcep.
VocoderFeatures ConvertFeatures(const VocoderFeatures &features,
                                const gan::Checkpoint &ckpt,
                                Direction direction, bool differential = true);

// Resamples to 16 kHz when needed, analyzes, converts and resynthesizes.
// Throws kEmptyInput for an empty clip; `converted` receives the features
// handed to the synthesizer.
AudioClip SanitizeClip(const AudioClip &clip, const gan::Checkpoint &ckpt,
                       const SanitizeConfig &config,
                       VocoderFeatures *converted = nullptr);

struct FileResult {
  std::string relative_path;
  std::string output_path;
  bool ok = false;
  std::string error;
  double seconds = 0.0;
};

struct BatchReport {
  std::vector<FileResult> files;  // corpus order
  int succeeded = 0;
  int failed = 0;
  double seconds = 0.0;
  // "ok", "partial" (some failed) or "failed" (none succeeded).
  std::string status() const;
};

// One job per entry; output goes to <output_dir>/<relative path>. A failing
// file is recorded and does not stop the others. Throws kEmptyCorpus and
// kOutputDirUnwritable.
BatchReport SanitizeBatch(const Corpus &corpus, const gan::Checkpoint &ckpt,
                          const SanitizeConfig &config);

// Status listing without timings, so identical runs give identical text.
std::string FormatBatchReport(const BatchReport &report);
// batch.csv (status per file) and batch_timings.csv.
void WriteBatchReport(const BatchReport &report, const std::string &dir);

}  // namespace voxsan

#endif  // VOXSAN_PIPELINE_SANITIZE_H_
