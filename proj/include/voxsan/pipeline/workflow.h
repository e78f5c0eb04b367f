// include/voxsan/pipeline/workflow.h

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

#ifndef VOXSAN_PIPELINE_WORKFLOW_H_
#define VOXSAN_PIPELINE_WORKFLOW_H_

#include <functional>
#include <memory>
#include <string>

#include "voxsan/corpus/manifest.h"
#include "voxsan/eval/report.h"
#include "voxsan/eval/transcription.h"
#include "voxsan/gan/checkpoint.h"
#include "voxsan/pipeline/config.h"
#include "voxsan/pipeline/sanitize.h"

namespace voxsan {

using StepObserver = std::function<void(const gan::StepRecord &)>;

// Analyzes both corpora, fits per-domain normalization and log-F0
// statistics, trains the CycleGAN on normalized mcep tracks and returns a
// self-contained checkpoint. When training diverges (kNonFiniteLoss) and
// `abort_path` is set, the last finite state is saved there before the
// error propagates.
gan::Checkpoint TrainModel(const Corpus &x, const Corpus &y,
                           const PipelineConfig &config,
                           const StepObserver &observer = {},
                           const std::string &abort_path = {});

SanitizeConfig MakeSanitizeConfig(const PipelineConfig &config,
                                  const std::string &output_dir);

// Owns the provider chosen by config.evaluate: the offline stub over the
// given transcripts, an HTTP provider (cached on disk when cache_dir is
// set) or nothing.
class ProviderHandle {
 public:
  ProviderHandle(const EvaluateConfig &config, const Corpus &transcripts);
  TranscriptionProvider *get() const;

 private:
  std::unique_ptr<TranscriptionProvider> inner_;
  std::unique_ptr<CachedTranscriber> cached_;
};

// Trains the emotion classifier on the training split of original plus
// reference clips and compares the test-split clips of `original` with
// their counterparts under `sanitized_dir`. Throws kCorpusMismatch when a
// sanitized counterpart is missing.
EvaluationReport EvaluateCorpora(const Corpus &original, const Corpus &reference,
                                 const std::string &sanitized_dir,
                                 const PipelineConfig &config);

struct PipelineResult {
  gan::Checkpoint checkpoint;
  BatchReport batch;
  EvaluationReport report;
};

// Train on (x, y), convert every x clip, evaluate, and write under
// out_dir: config.ini, model.ckpt, loss_history.csv, sanitized/,
// batch.csv, batch_timings.csv and report/.
PipelineResult RunPipeline(const Corpus &x, const Corpus &y,
                           const PipelineConfig &config,
                           const std::string &out_dir,
                           const StepObserver &observer = {});

}  // namespace voxsan

#endif  // VOXSAN_PIPELINE_WORKFLOW_H_
