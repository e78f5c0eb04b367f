// tools/voxsan.cc

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

// Command-line front end: analyze, train, convert, evaluate, pipeline and
// synth. Exit codes: 0 ok, 1 usage, 2 partial failure, 3 fatal.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "voxsan/common/error.h"
#include "voxsan/corpus/manifest.h"
#include "voxsan/corpus/resample.h"
#include "voxsan/corpus/wav.h"
#include "voxsan/eval/summary.h"
#include "voxsan/pipeline/config.h"
#include "voxsan/pipeline/sanitize.h"
#include "voxsan/pipeline/workflow.h"
#include "voxsan/synth/synthetic_corpus.h"
#include "voxsan/vocoder/feature_io.h"

namespace fs = std::filesystem;
using namespace voxsan;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPartial = 2;
constexpr int kExitFatal = 3;

struct Common {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  bool quiet = false;
};

void AddCommon(CLI::App *app, Common &common, bool seeded) {
  app->add_option("--config", common.config_path, "INI configuration file")
      ->check(CLI::ExistingFile);
  app->add_option("--threads", common.threads, "worker threads")->check(CLI::PositiveNumber);
  if (seeded) app->add_option("--seed", common.seed, "seed for every stochastic stage");
  app->add_flag("-q,--quiet", common.quiet, "suppress progress output");
}

PipelineConfig Configure(const Common &common) {
  PipelineConfig config =
      common.config_path.empty() ? PipelineConfig{} : LoadConfig(common.config_path);
  if (common.seed) {
    config.train.seed = *common.seed;
    config.evaluate.seed = *common.seed;
    config.sanitize.synthesis.seed = *common.seed;
  }
  if (common.threads) config.threads = *common.threads;
  config.Resolve();
  return config;
}

StepObserver Progress(const Common &common) {
  if (common.quiet) return {};
  return [](const gan::StepRecord &r) {
    if (r.step % 100 != 0) return;
    std::fprintf(stderr, "step %d epoch %d  G %.4f  D %.4f  cycle %.4f  identity %.4f\n",
                 r.step, r.epoch, r.losses.adversarial_g, r.losses.adversarial_d,
                 r.losses.cycle, r.losses.identity);
  };
}

void WriteText(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw Error(ErrorCode::kIoFailure, "cannot write " + path);
}

int BatchExit(const BatchReport &report) {
  if (report.status() == "ok") return kExitOk;
  return report.status() == "partial" ? kExitPartial : kExitFatal;
}

int RunAnalyze(const std::string &wav, const std::string &dump, const Common &common) {
  const PipelineConfig config = Configure(common);
  AudioClip clip = ReadWav(wav);
  if (clip.sample_rate != 16000) clip = Resample(clip, 16000);
  const VocoderFeatures features = Analyze(clip, config.analysis);
  const std::vector<double> summary = ExtractClipSummary(
      features, config.features.mcep_order, config.features.warp);
  const std::vector<std::string> names = SummaryFieldNames(config.features.mcep_order);
  std::printf("file %s\nduration_s %.3f\nframes %zu\nvoiced_frames %zu\n", wav.c_str(),
              static_cast<double>(clip.samples.size()) / clip.sample_rate,
              features.frames(), features.f0.VoicedCount());
  for (std::size_t i = 0; i < summary.size(); ++i)
    std::printf("%s %.6f\n", names[i].c_str(), summary[i]);
  if (!dump.empty()) WriteFeatures(features, dump);
  return kExitOk;
}

int RunTrain(const std::string &mx, const std::string &my, const std::string &out,
             const Common &common) {
  const PipelineConfig config = Configure(common);
  const gan::Checkpoint ckpt =
      TrainModel(LoadManifest(mx), LoadManifest(my), config, Progress(common), out);
  gan::SaveCheckpoint(ckpt, out);
  WriteText(out + ".loss.csv", gan::LossHistoryCsv(ckpt.history));
  if (!common.quiet)
    std::fprintf(stderr, "trained %d epoch(s), %zu steps -> %s\n", ckpt.epoch,
                 ckpt.history.size(), out.c_str());
  return kExitOk;
}

int RunConvert(const std::string &ckpt_path, const std::string &in, const std::string &out,
               const std::string &direction, const Common &common) {
  PipelineConfig config = Configure(common);
  if (!direction.empty())
    config.sanitize.direction = direction == "y2x" ? Direction::kYToX : Direction::kXToY;
  const gan::Checkpoint ckpt = gan::LoadCheckpoint(ckpt_path);
  SanitizeConfig sanitize = MakeSanitizeConfig(config, out);
  sanitize.checkpoint_path = ckpt_path;

  if (fs::path(in).extension() == ".wav") {
    fs::create_directories(out);
    const std::string target = (fs::path(out) / fs::path(in).filename()).string();
    VocoderFeatures features;
    WriteWav(SanitizeClip(ReadWav(in), ckpt, sanitize, &features), target);
    if (sanitize.dump_features) WriteFeatures(features, target + ".vxft");
    if (!common.quiet) std::fprintf(stderr, "wrote %s\n", target.c_str());
    return kExitOk;
  }
  const BatchReport report = SanitizeBatch(LoadManifest(in), ckpt, sanitize);
  WriteBatchReport(report, out);
  std::printf("%s", FormatBatchReport(report).c_str());
  return BatchExit(report);
}

int RunEvaluate(const std::string &original, const std::string &reference,
                const std::string &sanitized, const std::string &out,
                const std::string &provider, const Common &common) {
  PipelineConfig config = Configure(common);
  if (!provider.empty()) config.evaluate.provider = provider;
  const Corpus extra = reference.empty() ? Corpus{} : LoadManifest(reference);
  const EvaluationReport report =
      EvaluateCorpora(LoadManifest(original), extra, sanitized, config);
  WriteReport(report, out);
  std::printf("%s", FormatReport(report).c_str());
  return kExitOk;
}

int RunPipelineCommand(const std::string &mx, const std::string &my,
                       const std::string &out, const Common &common) {
  const PipelineConfig config = Configure(common);
  const PipelineResult result =
      RunPipeline(LoadManifest(mx), LoadManifest(my), config, out, Progress(common));
  std::printf("%s", FormatReport(result.report).c_str());
  return BatchExit(result.batch);
}

int RunSynth(const std::string &out, SyntheticCorpusOptions options) {
  const SyntheticCorpus corpus = WriteSyntheticCorpus(out, options);
  std::printf("%s\n%s\n", corpus.emotional_manifest.c_str(),
              corpus.neutral_manifest.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"voxsan: emotion sanitization for speech"};
  app.require_subcommand(1);

  Common common;
  std::string wav, dump;
  auto *analyze = app.add_subcommand("analyze", "print vocoder features of a clip");
  analyze->add_option("wav", wav, "input WAV")->required()->check(CLI::ExistingFile);
  analyze->add_option("--dump", dump, "write the features to this file");
  AddCommon(analyze, common, false);

  std::string mx, my, out;
  auto *train = app.add_subcommand("train", "train a conversion model");
  train->add_option("--manifest-x", mx, "emotional domain manifest")->required();
  train->add_option("--manifest-y", my, "neutral domain manifest")->required();
  train->add_option("--out", out, "checkpoint path")->required();
  AddCommon(train, common, true);

  std::string ckpt, in, direction;
  auto *convert = app.add_subcommand("convert", "sanitize a WAV or a manifest");
  convert->add_option("--ckpt", ckpt, "checkpoint")->required()->check(CLI::ExistingFile);
  convert->add_option("--in", in, "WAV file or manifest")->required()->check(CLI::ExistingFile);
  convert->add_option("--out", out, "output directory")->required();
  convert->add_option("--direction", direction, "x2y or y2x")
      ->check(CLI::IsMember({"x2y", "y2x"}));
  AddCommon(convert, common, true);

  std::string original, reference, sanitized, provider;
  auto *evaluate = app.add_subcommand("evaluate", "compare original and sanitized clips");
  evaluate->add_option("--original", original, "manifest of original clips")->required();
  evaluate->add_option("--reference", reference,
                       "extra manifest used only for classifier training");
  evaluate->add_option("--sanitized", sanitized, "directory of sanitized clips")->required();
  evaluate->add_option("--out", out, "report directory")->required();
  evaluate->add_option("--provider", provider, "transcription provider")
      ->check(CLI::IsMember({"stub", "http", "none"}));
  AddCommon(evaluate, common, true);

  auto *pipeline = app.add_subcommand("pipeline", "train, convert and evaluate");
  pipeline->add_option("--manifest-x", mx, "emotional domain manifest")->required();
  pipeline->add_option("--manifest-y", my, "neutral domain manifest")->required();
  pipeline->add_option("--out", out, "output directory")->required();
  AddCommon(pipeline, common, true);

  SyntheticCorpusOptions synth_options;
  auto *synth = app.add_subcommand("synth", "write a synthetic two-domain corpus");
  synth->add_option("--out", out, "corpus directory")->required();
  synth->add_option("--speakers", synth_options.speakers)->check(CLI::PositiveNumber);
  synth->add_option("--clips", synth_options.clips_per_domain, "clips per domain")
      ->check(CLI::PositiveNumber);
  synth->add_option("--duration", synth_options.duration_s, "seconds per clip")
      ->check(CLI::PositiveNumber);
  synth->add_option("--seed", synth_options.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return RunAnalyze(wav, dump, common);
    if (*train) return RunTrain(mx, my, out, common);
    if (*convert) return RunConvert(ckpt, in, out, direction, common);
    if (*evaluate) return RunEvaluate(original, reference, sanitized, out, provider, common);
    if (*pipeline) return RunPipelineCommand(mx, my, out, common);
    if (*synth) return RunSynth(out, synth_options);
  } catch (const std::exception &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFatal;
  }
  return kExitUsage;
}
