// src/eval/report.cc

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

#include "voxsan/eval/report.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>

#include "voxsan/common/error.h"
#include "voxsan/common/parallel.h"
#include "voxsan/corpus/resample.h"
#include "voxsan/corpus/wav.h"
#include "voxsan/eval/eer.h"
#include "voxsan/eval/mcd.h"
#include "voxsan/eval/speaker.h"
#include "voxsan/eval/summary.h"
#include "voxsan/eval/wer.h"

namespace voxsan {

namespace {

constexpr int kAnalysisRate = 16000;

std::optional<double> Eer(const std::vector<AnalyzedClip> &clips,
                          std::uint64_t seed, std::vector<std::string> &notes,
                          const char *which) {
  std::vector<SpeakerEmbedding> embeddings;
  for (const auto &c : clips)
    embeddings.push_back(
        RawSpeakerEmbedding(c.f0, c.mcep, c.entry.labels.speaker_id));
  NormalizeEmbeddings(embeddings);
  try {
    const auto trials = SpeakerScores(embeddings, seed);
    return EqualErrorRate(trials.genuine, trials.impostor);
  } catch (const Error &e) {
    notes.push_back(std::string("speaker EER (") + which + ") absent: " +
                    e.what());
    return std::nullopt;
  }
}

std::string Fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string Fixed(const std::optional<double> &v) {
  return v ? Fixed(*v) : std::string("NA");
}

void WriteText(const std::filesystem::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out)
    throw Error(ErrorCode::kIoFailure, "cannot write " + path.string());
}

}  // namespace

std::vector<AnalyzedClip> AnalyzeCorpus(const Corpus &corpus,
                                        const ReportOptions &options) {
  std::vector<AnalyzedClip> clips(corpus.size());
  ParallelFor(corpus.size(), options.threads, [&](std::size_t i) {
    AnalyzedClip &c = clips[i];
    c.entry = corpus.entries[i];
    c.audio = ReadWav(c.entry.path);
    if (c.audio.sample_rate != kAnalysisRate)
      c.audio = Resample(c.audio, kAnalysisRate);
    const VocoderFeatures features = Analyze(c.audio, options.analysis);
    c.f0 = features.f0;
    c.mcep = EnvelopeToMcep(features.envelope, options.mcep_order, options.warp);
    c.summary = SummarizeClip(c.f0, c.mcep);
  });
  return clips;
}

EmotionClassifier TrainEmotionClassifier(const std::vector<AnalyzedClip> &clips,
                                         const ClassifierOptions &options) {
  std::vector<std::vector<double>> summaries;
  std::vector<Emotion> labels;
  for (const auto &c : clips) {
    summaries.push_back(c.summary);
    labels.push_back(c.entry.labels.emotion);
  }
  EmotionClassifier clf = TrainEmotionClassifier(summaries, labels, options);
  for (const auto &c : clips) clf.training_keys.push_back(c.entry.relative_path);
  return clf;
}

CorpusSplit SplitCorpus(const Corpus &corpus, double train_fraction,
                        std::uint64_t seed) {
  if (!(train_fraction >= 0.0 && train_fraction <= 1.0))
    throw Error(ErrorCode::kInvalidArgument, "train fraction must be in [0, 1]");
  std::map<int, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    by_class[static_cast<int>(corpus.entries[i].labels.emotion)].push_back(i);
  std::mt19937_64 rng(seed);
  std::vector<bool> in_train(corpus.size(), false);
  for (auto &[label, members] : by_class) {
    for (std::size_t k = members.size(); k > 1; --k)
      std::swap(members[k - 1], members[rng() % k]);
    auto take = static_cast<std::size_t>(
        std::llround(train_fraction * static_cast<double>(members.size())));
    if (members.size() >= 2) take = std::min(take, members.size() - 1);
    for (std::size_t k = 0; k < take; ++k) in_train[members[k]] = true;
  }
  CorpusSplit split;
  split.train.root_dir = split.test.root_dir = corpus.root_dir;
  for (std::size_t i = 0; i < corpus.size(); ++i)
    (in_train[i] ? split.train : split.test).entries.push_back(corpus.entries[i]);
  return split;
}

Corpus MirrorCorpus(const Corpus &original, const std::string &dir) {
  Corpus out;
  out.root_dir = dir;
  for (const auto &e : original.entries) {
    CorpusEntry m = e;
    m.path = (std::filesystem::path(dir) / e.relative_path).string();
    out.entries.push_back(std::move(m));
  }
  return out;
}

EvaluationReport PrivacyUtilityReport(const std::vector<AnalyzedClip> &original,
                                      const std::vector<AnalyzedClip> &sanitized,
                                      const EmotionClassifier &classifier,
                                      TranscriptionProvider *provider,
                                      const ReportOptions &options) {
  std::map<std::string, std::size_t> by_path;
  for (std::size_t i = 0; i < sanitized.size(); ++i)
    if (!by_path.emplace(sanitized[i].entry.relative_path, i).second)
      throw Error(ErrorCode::kCorpusMismatch,
                  "duplicate sanitized clip " + sanitized[i].entry.relative_path);
  if (original.size() != sanitized.size())
    throw Error(ErrorCode::kCorpusMismatch,
                "original and sanitized corpora differ in size");
  if (original.empty())
    throw Error(ErrorCode::kEmptyCorpus, "nothing to evaluate");
  const std::set<std::string> trained(classifier.training_keys.begin(),
                                      classifier.training_keys.end());

  EvaluationReport report;
  report.original_clips = original.size();
  report.sanitized_clips = sanitized.size();
  report.config_fingerprint = options.config_fingerprint;
  report.provider = provider ? provider->Name() : "none";

  std::vector<AnalyzedClip> aligned;
  aligned.reserve(original.size());
  int correct_original = 0, correct_sanitized = 0;
  double mcd_total = 0.0;
  for (const auto &o : original) {
    const auto it = by_path.find(o.entry.relative_path);
    if (it == by_path.end())
      throw Error(ErrorCode::kCorpusMismatch,
                  "no sanitized clip for " + o.entry.relative_path);
    if (trained.count(o.entry.relative_path))
      throw Error(ErrorCode::kProtocolViolation,
                  "classifier was trained on evaluation clip " +
                      o.entry.relative_path);
    const AnalyzedClip &s = sanitized[it->second];
    aligned.push_back(s);
    aligned.back().entry.labels = o.entry.labels;

    ClipResult r;
    r.relative_path = o.entry.relative_path;
    r.label = o.entry.labels.emotion;
    r.predicted_original = ClassifyEmotion(classifier, o.summary).label;
    r.predicted_sanitized = ClassifyEmotion(classifier, s.summary).label;
    r.mcd = MelCepstralDistortion(o.mcep, s.mcep);
    correct_original += r.predicted_original == r.label;
    correct_sanitized += r.predicted_sanitized == r.label;
    mcd_total += r.mcd;
    report.clips.push_back(r);
  }
  const double n = static_cast<double>(original.size());
  report.accuracy_original = correct_original / n;
  report.accuracy_sanitized = correct_sanitized / n;
  report.accuracy_drop = report.accuracy_original - report.accuracy_sanitized;
  report.relative_accuracy_drop =
      report.accuracy_original > 0.0
          ? report.accuracy_drop / report.accuracy_original
          : 0.0;
  report.mean_mcd = mcd_total / n;

  report.eer_original = Eer(original, options.seed, report.notes, "original");
  report.eer_sanitized = Eer(aligned, options.seed, report.notes, "sanitized");
  if (report.eer_original && report.eer_sanitized)
    report.eer_delta = *report.eer_sanitized - *report.eer_original;

  if (!provider) {
    report.notes.push_back("WER absent: no transcription provider");
  } else {
    try {
      double total_o = 0.0, total_s = 0.0;
      int counted = 0;
      for (std::size_t i = 0; i < original.size(); ++i) {
        const auto &reference = original[i].entry.labels.transcript;
        if (!reference || NormalizeWords(*reference).empty()) continue;
        TranscriptionRequest request{original[i].entry.relative_path,
                                     options.language};
        const double wo = WordErrorRate(
            *reference, provider->Transcribe(original[i].audio, request));
        const double ws = WordErrorRate(
            *reference, provider->Transcribe(aligned[i].audio, request));
        report.clips[i].wer_original = wo;
        report.clips[i].wer_sanitized = ws;
        total_o += wo;
        total_s += ws;
        ++counted;
      }
      if (counted > 0) {
        report.wer_original = total_o / counted;
        report.wer_sanitized = total_s / counted;
      } else {
        report.notes.push_back("WER absent: no reference transcripts");
      }
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kProviderUnavailable &&
          e.code() != ErrorCode::kProviderTimeout)
        throw;
      for (auto &c : report.clips) c.wer_original = c.wer_sanitized = std::nullopt;
      report.notes.push_back(std::string("WER absent: ") + e.what());
    }
  }
  return report;
}

EvaluationReport PrivacyUtilityReport(const Corpus &original,
                                      const Corpus &sanitized,
                                      const EmotionClassifier &classifier,
                                      TranscriptionProvider *provider,
                                      const ReportOptions &options) {
  return PrivacyUtilityReport(AnalyzeCorpus(original, options),
                              AnalyzeCorpus(sanitized, options), classifier,
                              provider, options);
}

std::string FormatReport(const EvaluationReport &r) {
  std::string out = "voxsan evaluation report\n";
  auto line = [&](const std::string &key, const std::string &value) {
    out += key + ": " + value + "\n";
  };
  line("clips", std::to_string(r.original_clips) + " original, " +
                    std::to_string(r.sanitized_clips) + " sanitized");
  line("config fingerprint", r.config_fingerprint.empty() ? "none"
                                                          : r.config_fingerprint);
  out += "\n[emotion recognition]\n";
  line("accuracy original", Fixed(r.accuracy_original));
  line("accuracy sanitized", Fixed(r.accuracy_sanitized));
  line("accuracy drop", Fixed(r.accuracy_drop));
  line("relative drop", Fixed(r.relative_accuracy_drop));
  out += "\n[spectral distortion]\n";
  line("mean MCD dB", Fixed(r.mean_mcd));
  out += "\n[speaker verification]\n";
  line("EER original", Fixed(r.eer_original));
  line("EER sanitized", Fixed(r.eer_sanitized));
  line("EER delta", Fixed(r.eer_delta));
  out += "\n[speech recognition]\n";
  line("provider", r.provider);
  line("WER original", Fixed(r.wer_original));
  line("WER sanitized", Fixed(r.wer_sanitized));
  if (!r.notes.empty()) {
    out += "\n[notes]\n";
    for (const auto &n : r.notes) out += n + "\n";
  }
  return out;
}

void WriteReport(const EvaluationReport &r, const std::string &dir) {
  const std::filesystem::path root(dir);
  std::error_code ec;
  std::filesystem::create_directories(root, ec);
  if (ec)
    throw Error(ErrorCode::kOutputDirUnwritable,
                "cannot create " + dir + ": " + ec.message());
  WriteText(root / "report.txt", FormatReport(r));

  std::string clips =
      "relative_path,label,predicted_original,predicted_sanitized,mcd_db,"
      "wer_original,wer_sanitized\n";
  for (const auto &c : r.clips) {
    clips += c.relative_path + "," + std::string(EmotionName(c.label)) + "," +
             std::string(EmotionName(c.predicted_original)) + "," +
             std::string(EmotionName(c.predicted_sanitized)) + "," +
             Fixed(c.mcd) + "," + Fixed(c.wer_original) + "," +
             Fixed(c.wer_sanitized) + "\n";
  }
  WriteText(root / "clips.csv", clips);

  std::string metrics = "metric,original,sanitized,delta\n";
  metrics += "emotion_accuracy," + Fixed(r.accuracy_original) + "," +
             Fixed(r.accuracy_sanitized) + "," + Fixed(-r.accuracy_drop) + "\n";
  std::optional<double> wer_delta;
  if (r.wer_original && r.wer_sanitized)
    wer_delta = *r.wer_sanitized - *r.wer_original;
  metrics += "speaker_eer," + Fixed(r.eer_original) + "," +
             Fixed(r.eer_sanitized) + "," + Fixed(r.eer_delta) + "\n";
  metrics += "wer," + Fixed(r.wer_original) + "," + Fixed(r.wer_sanitized) +
             "," + Fixed(wer_delta) + "\n";
  metrics += "mcd_db,0.000000," + Fixed(r.mean_mcd) + "," + Fixed(r.mean_mcd) + "\n";
  WriteText(root / "metrics.csv", metrics);

  auto complement = [](const std::optional<double> &v) -> std::optional<double> {
    if (!v) return std::nullopt;
    return std::max(0.0, 1.0 - *v);
  };
  std::string figure = "task,original,sanitized\n";
  figure += "emotion_recognition," + Fixed(r.accuracy_original) + "," +
            Fixed(r.accuracy_sanitized) + "\n";
  figure += "speaker_recognition," + Fixed(complement(r.eer_original)) + "," +
            Fixed(complement(r.eer_sanitized)) + "\n";
  figure += "speech_recognition," + Fixed(complement(r.wer_original)) + "," +
            Fixed(complement(r.wer_sanitized)) + "\n";
  WriteText(root / "figure.csv", figure);
}

}  // namespace voxsan
