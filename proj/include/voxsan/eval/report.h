// include/voxsan/eval/report.h

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

#ifndef VOXSAN_EVAL_REPORT_H_
#define VOXSAN_EVAL_REPORT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "voxsan/corpus/manifest.h"
#include "voxsan/eval/classifier.h"
#include "voxsan/eval/transcription.h"
#include "voxsan/features/mcep.h"
#include "voxsan/vocoder/vocoder.h"

namespace voxsan {

struct ReportOptions {
  AnalysisConfig analysis;
  int mcep_order = kDefaultMcepOrder;
  double warp = kDefaultWarp;
  std::uint64_t seed = 1;  // impostor trial sampling
  int threads = 1;
  std::string language = "en-US";
  std::string config_fingerprint;
};

// What the evaluation keeps of a clip after analysis.
struct AnalyzedClip {
  CorpusEntry entry;
  AudioClip audio;  // at the analysis rate
  F0Track f0;
  McepTrack mcep;
  std::vector<double> summary;
};

// Reads, resamples to 16 kHz when needed and analyzes every entry, in
// corpus order.
std::vector<AnalyzedClip> AnalyzeCorpus(const Corpus &corpus,
                                        const ReportOptions &options);

// Records the relative paths of the clips as training keys.
EmotionClassifier TrainEmotionClassifier(const std::vector<AnalyzedClip> &clips,
                                         const ClassifierOptions &options = {});

struct CorpusSplit {
  Corpus train;
  Corpus test;
};

// Seeded split per emotion class: round(train_fraction * count) clips of
// each class go to `train`, at least one stays in `test` when the class has
// two or more clips. Entry order within each part follows the corpus.
CorpusSplit SplitCorpus(const Corpus &corpus, double train_fraction,
                        std::uint64_t seed);

// The entries of `original` relocated under `dir` by relative path.
Corpus MirrorCorpus(const Corpus &original, const std::string &dir);

struct ClipResult {
  std::string relative_path;
  Emotion label = Emotion::kNeutral;
  Emotion predicted_original = Emotion::kNeutral;
  Emotion predicted_sanitized = Emotion::kNeutral;
  double mcd = 0.0;
  std::optional<double> wer_original;
  std::optional<double> wer_sanitized;
};

struct EvaluationReport {
  std::size_t original_clips = 0;
  std::size_t sanitized_clips = 0;
  double accuracy_original = 0.0;
  double accuracy_sanitized = 0.0;
  double accuracy_drop = 0.0;           // original - sanitized
  double relative_accuracy_drop = 0.0;  // drop / original (0 if original is 0)
  double mean_mcd = 0.0;
  std::optional<double> eer_original;
  std::optional<double> eer_sanitized;
  std::optional<double> eer_delta;  // sanitized - original
  std::optional<double> wer_original;
  std::optional<double> wer_sanitized;
  std::string provider;
  std::vector<std::string> notes;
  std::string config_fingerprint;
  std::vector<ClipResult> clips;
};

// Throws kCorpusMismatch unless every original clip has exactly one
// sanitized clip with the same relative path, and kProtocolViolation when
// the classifier was trained on any evaluated clip. Speaker EER is absent
// when the corpus lacks two speakers with two clips each; WER is absent
// without a provider, when no clip has a reference transcript, or when the
// provider fails.
EvaluationReport PrivacyUtilityReport(const std::vector<AnalyzedClip> &original,
                                      const std::vector<AnalyzedClip> &sanitized,
                                      const EmotionClassifier &classifier,
                                      TranscriptionProvider *provider,
                                      const ReportOptions &options);
EvaluationReport PrivacyUtilityReport(const Corpus &original,
                                      const Corpus &sanitized,
                                      const EmotionClassifier &classifier,
                                      TranscriptionProvider *provider,
                                      const ReportOptions &options);

std::string FormatReport(const EvaluationReport &report);

// Writes report.txt, clips.csv (per clip), metrics.csv (one row per metric)
// and figure.csv (task, original, sanitized accuracy-style series).
void WriteReport(const EvaluationReport &report, const std::string &dir);

}  // namespace voxsan

#endif  // VOXSAN_EVAL_REPORT_H_
