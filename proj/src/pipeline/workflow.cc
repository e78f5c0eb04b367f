// src/pipeline/workflow.cc

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

#include "voxsan/pipeline/workflow.h"

#include <filesystem>
#include <fstream>
#include <set>

#include "voxsan/common/error.h"
#include "voxsan/common/parallel.h"
#include "voxsan/corpus/resample.h"
#include "voxsan/corpus/wav.h"
#include "voxsan/features/f0_stats.h"
#include "voxsan/features/mcep.h"
#include "voxsan/features/normalize.h"
#include "voxsan/gan/trainer.h"

namespace voxsan {

namespace fs = std::filesystem;

namespace {

struct DomainData {
  std::vector<Matrix> mcep;
  std::vector<F0Track> f0;
};

DomainData AnalyzeDomain(const Corpus &corpus, const PipelineConfig &config) {
  DomainData data;
  data.mcep.resize(corpus.size());
  data.f0.resize(corpus.size());
  ParallelFor(corpus.size(), config.threads, [&](std::size_t i) {
    AudioClip clip = ReadWav(corpus.entries[i].path);
    if (clip.sample_rate != 16000) clip = Resample(clip, 16000);
    const VocoderFeatures features = Analyze(clip, config.analysis);
    data.mcep[i] = EnvelopeToMcep(features.envelope, config.features.mcep_order,
                                  config.features.warp)
                       .values;
    data.f0[i] = features.f0;
  });
  return data;
}

DomainStats FitDomain(const DomainData &data) {
  DomainStats stats;
  stats.norm = FitNorm(data.mcep);
  stats.logf0 = ComputeLogF0Stats(data.f0);
  return stats;
}

std::string DomainName(const Corpus &corpus, const std::string &fallback) {
  if (corpus.empty()) return fallback;
  return std::string(EmotionName(corpus.entries.front().labels.emotion));
}

void WriteText(const fs::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(ErrorCode::kIoFailure, "cannot write " + path.string());
}

}  // namespace

gan::Checkpoint TrainModel(const Corpus &x, const Corpus &y,
                           const PipelineConfig &config,
                           const StepObserver &observer,
                           const std::string &abort_path) {
  if (x.empty() || y.empty())
    throw Error(ErrorCode::kEmptyCorpus, "both domains need clips");
  const DomainData dx = AnalyzeDomain(x, config);
  const DomainData dy = AnalyzeDomain(y, config);

  gan::Checkpoint ckpt;
  ckpt.spec = config.ModelSpecFor(config.features.mcep_order + 1);
  ckpt.config = config.train;
  ckpt.config.segment_length = ckpt.spec.segment_length;
  ckpt.warp = config.features.warp;
  ckpt.domain_x = DomainName(x, "source");
  ckpt.domain_y = DomainName(y, "target");
  ckpt.stats.source = FitDomain(dx);
  ckpt.stats.target = FitDomain(dy);
  if (config.features.normalization == "shared") {
    std::vector<Matrix> pooled = dx.mcep;
    pooled.insert(pooled.end(), dy.mcep.begin(), dy.mcep.end());
    ckpt.stats.source.norm = FitNorm(pooled);
    ckpt.stats.target.norm = ckpt.stats.source.norm;
  }

  std::vector<Matrix> nx, ny;
  for (const Matrix &m : dx.mcep) nx.push_back(ApplyNorm(m, ckpt.stats.source.norm));
  for (const Matrix &m : dy.mcep) ny.push_back(ApplyNorm(m, ckpt.stats.target.norm));

  gan::Trainer trainer(ckpt.spec, ckpt.config);
  try {
    trainer.Train(nx, ny, observer);
  } catch (const Error &e) {
    if (e.code() == ErrorCode::kNonFiniteLoss && !abort_path.empty()) {
      ckpt.model = trainer.model();
      ckpt.history = trainer.history();
      ckpt.epoch = trainer.epochs_completed();
      gan::SaveCheckpoint(ckpt, abort_path);
    }
    throw;
  }
  ckpt.model = trainer.model();
  ckpt.history = trainer.history();
  ckpt.epoch = trainer.epochs_completed();
  return ckpt;
}

SanitizeConfig MakeSanitizeConfig(const PipelineConfig &config,
                                  const std::string &output_dir) {
  SanitizeConfig s;
  s.direction = config.sanitize.direction;
  s.analysis = config.analysis;
  s.output_dir = output_dir;
  s.threads = config.threads;
  s.peak_normalize = config.sanitize.peak_normalize;
  s.dump_features = config.sanitize.dump_features;
  s.differential_envelope = config.sanitize.differential_envelope;
  s.synthesis = config.sanitize.synthesis;
  return s;
}

ProviderHandle::ProviderHandle(const EvaluateConfig &config,
                               const Corpus &transcripts) {
  if (config.provider == "stub") {
    inner_ = std::make_unique<StubTranscriber>(transcripts);
  } else if (config.provider == "http") {
    HttpTranscriberOptions options;
    options.url = config.provider_url;
    options.timeout_seconds = config.timeout_seconds;
    inner_ = std::make_unique<HttpTranscriber>(options);
  } else if (config.provider != "none") {
    throw Error(ErrorCode::kBadConfig, "unknown provider " + config.provider);
  }
  if (inner_ && !config.cache_dir.empty())
    cached_ = std::make_unique<CachedTranscriber>(*inner_, config.cache_dir);
}

TranscriptionProvider *ProviderHandle::get() const {
  if (cached_) return cached_.get();
  return inner_.get();
}

EvaluationReport EvaluateCorpora(const Corpus &original, const Corpus &reference,
                                 const std::string &sanitized_dir,
                                 const PipelineConfig &config) {
  Corpus all = original;
  all.entries.insert(all.entries.end(), reference.entries.begin(),
                     reference.entries.end());
  const CorpusSplit split =
      SplitCorpus(all, config.evaluate.train_fraction, config.evaluate.seed);
  std::set<std::string> original_paths;
  for (const auto &e : original.entries) original_paths.insert(e.path);
  Corpus eval;
  eval.root_dir = original.root_dir;
  for (const auto &e : split.test.entries)
    if (original_paths.count(e.path)) eval.entries.push_back(e);
  const Corpus sanitized = MirrorCorpus(eval, sanitized_dir);
  for (const auto &e : sanitized.entries)
    if (!fs::exists(e.path))
      throw Error(ErrorCode::kCorpusMismatch, "missing sanitized clip " + e.path);

  ReportOptions options;
  options.analysis = config.analysis;
  options.mcep_order = config.features.mcep_order;
  options.warp = config.features.warp;
  options.seed = config.evaluate.seed;
  options.threads = config.threads;
  options.language = config.evaluate.language;
  options.config_fingerprint = ConfigFingerprint(config);

  const auto classifier = TrainEmotionClassifier(AnalyzeCorpus(split.train, options));
  ProviderHandle provider(config.evaluate, all);
  return PrivacyUtilityReport(AnalyzeCorpus(eval, options),
                              AnalyzeCorpus(sanitized, options), classifier,
                              provider.get(), options);
}

PipelineResult RunPipeline(const Corpus &x, const Corpus &y,
                           const PipelineConfig &config,
                           const std::string &out_dir,
                           const StepObserver &observer) {
  const fs::path root(out_dir);
  std::error_code ec;
  fs::create_directories(root, ec);
  if (ec || !fs::is_directory(root))
    throw Error(ErrorCode::kOutputDirUnwritable, "cannot create " + out_dir);
  WriteText(root / "config.ini", FormatConfig(config));

  PipelineResult result;
  const std::string ckpt_path = (root / "model.ckpt").string();
  result.checkpoint = TrainModel(x, y, config, observer, ckpt_path);
  gan::SaveCheckpoint(result.checkpoint, ckpt_path);
  WriteText(root / "loss_history.csv", gan::LossHistoryCsv(result.checkpoint.history));

  const Corpus &source = config.sanitize.direction == Direction::kXToY ? x : y;
  const Corpus &other = config.sanitize.direction == Direction::kXToY ? y : x;
  const std::string sanitized_dir = (root / "sanitized").string();
  result.batch = SanitizeBatch(source, result.checkpoint,
                               MakeSanitizeConfig(config, sanitized_dir));
  WriteBatchReport(result.batch, out_dir);

  Corpus converted;
  converted.root_dir = source.root_dir;
  for (std::size_t i = 0; i < source.size(); ++i)
    if (result.batch.files[i].ok) converted.entries.push_back(source.entries[i]);
  result.report = EvaluateCorpora(converted, other, sanitized_dir, config);
  if (result.batch.failed > 0)
    result.report.notes.push_back(std::to_string(result.batch.failed) +
                                  " clip(s) failed to convert and were not evaluated");
  WriteReport(result.report, (root / "report").string());
  return result;
}

}  // namespace voxsan
