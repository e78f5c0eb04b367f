// tests/pipeline_test.cc

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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>

#include "doctest.h"
#include "voxsan/common/error.h"
#include "voxsan/corpus/wav.h"
#include "voxsan/eval/mcd.h"
#include "voxsan/features/mcep.h"
#include "voxsan/gan/trainer.h"
#include "voxsan/pipeline/config.h"
#include "voxsan/pipeline/sanitize.h"
#include "voxsan/pipeline/workflow.h"
#include "voxsan/synth/synthetic_corpus.h"

using namespace voxsan;
namespace fs = std::filesystem;

namespace {

template <typename Fn>
ErrorCode CodeOf(Fn &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kInvalidArgument;
}

std::string TempDir(const std::string &name) {
  const fs::path dir = fs::temp_directory_path() / ("voxsan_pipeline_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir.string();
}

std::string Slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

DomainStats UnitStats(int dims) {
  DomainStats s;
  s.norm.mean.assign(dims, 0.0);
  s.norm.std.assign(dims, 1.0);
  s.norm.flagged.assign(dims, false);
  s.logf0.mean = std::log(150.0);
  s.logf0.std = 0.2;
  s.logf0.voiced_frame_count = 100;
  return s;
}

void ZeroOutputLayer(gan::Generator<float> &g) {
  for (const auto &slot : g.layout().slots())
    if (slot.name.rfind("out.", 0) == 0)
      std::fill_n(g.params().begin() + slot.offset, slot.size, 0.0f);
}

// Both generators reduce to the global residual and the domain statistics
// coincide, so conversion is the identity.
gan::Checkpoint IdentityCheckpoint(int dims) {
  gan::Checkpoint ckpt;
  ckpt.spec = gan::ProfileSpec("tiny", dims);
  ckpt.config.segment_length = ckpt.spec.segment_length;
  ckpt.model = gan::CycleGan<float>(ckpt.spec);
  ckpt.model.Initialize(3);
  ZeroOutputLayer(ckpt.model.g);
  ZeroOutputLayer(ckpt.model.f);
  ckpt.stats.source = UnitStats(dims);
  ckpt.stats.target = UnitStats(dims);
  return ckpt;
}

AudioClip Voice(double f0, std::uint64_t seed) {
  VoiceSpec spec;
  spec.f0_hz = f0;
  return SynthesizeVoice(spec, seed);
}

McepTrack Reanalyze(const AudioClip &clip, int order) {
  return EnvelopeToMcep(Analyze(clip).envelope, order);
}

Matrix ToySegment(std::mt19937_64 &rng, int length, int dims) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(length, dims);
  for (int d = 0; d < dims; ++d) {
    double v = normal(rng);
    for (int t = 0; t < length; ++t) {
      v = 0.8 * v + 0.6 * normal(rng);
      m(t, d) = 0.5 * v;
    }
  }
  return m;
}

// Clips on disk plus a corpus pointing at them.
Corpus WriteClips(const std::string &dir, const std::vector<AudioClip> &clips) {
  Corpus corpus;
  corpus.root_dir = dir;
  for (std::size_t i = 0; i < clips.size(); ++i) {
    CorpusEntry e;
    e.relative_path = "sub/clip" + std::to_string(i) + ".wav";
    e.path = (fs::path(dir) / e.relative_path).string();
    e.labels.speaker_id = "s" + std::to_string(i % 2);
    fs::create_directories(fs::path(e.path).parent_path());
    WriteWav(clips[i], e.path);
    corpus.entries.push_back(e);
  }
  return corpus;
}

}  // namespace

TEST_CASE("config round trips and rejects bad input") {
  PipelineConfig config;
  config.train.profile = "tiny";
  config.train.epochs = 7;
  config.sanitize.direction = Direction::kYToX;
  config.evaluate.seed = 99;
  config.threads = 3;
  config.Resolve();
  const std::string text = FormatConfig(config);
  const PipelineConfig parsed = ParseConfig(text);
  CHECK(FormatConfig(parsed) == text);
  CHECK(ConfigFingerprint(parsed) == ConfigFingerprint(config));
  CHECK(parsed.sanitize.direction == Direction::kYToX);
  CHECK(parsed.train.epochs == 7);

  PipelineConfig other = config;
  other.train.seed += 1;
  CHECK(ConfigFingerprint(other) != ConfigFingerprint(config));

  CHECK(CodeOf([] { ParseConfig("[train]\nepochz = 3\n"); }) == ErrorCode::kBadConfig);
  CHECK(CodeOf([] { ParseConfig("[sanitize]\ndirection = sideways\n"); }) ==
        ErrorCode::kBadConfig);
  CHECK(CodeOf([] { ParseConfig("[train]\nepochs = many\n"); }) == ErrorCode::kBadConfig);
  CHECK(CodeOf([] { ParseConfig("[features]\nnormalization = global\n"); }) ==
        ErrorCode::kBadConfig);
  CHECK(ParseConfig("[features]\nnormalization = shared\n").features.normalization ==
        "shared");
  CHECK(CodeOf([] { ParseConfig("[model]\nprofile = small\nsegment_length = 30\n"); }) ==
        ErrorCode::kBadConfig);
}

TEST_CASE("identity checkpoint reproduces plain resynthesis") {
  const AudioClip clip = Voice(140.0, 5);
  const AudioClip plain = Synthesize(Analyze(clip));
  const gan::Checkpoint ckpt = IdentityCheckpoint(25);
  SanitizeConfig config;
  VocoderFeatures converted;
  const AudioClip sanitized = SanitizeClip(clip, ckpt, config, &converted);

  CHECK(MelCepstralDistortion(Reanalyze(sanitized, 24), Reanalyze(plain, 24)) < 0.1);
  const long frame = clip.sample_rate * 5 / 1000;
  CHECK(std::labs(static_cast<long>(sanitized.samples.size()) -
                  static_cast<long>(clip.samples.size())) <= frame);

  // Voicing is decided by the converted F0 track alone.
  const VocoderFeatures analyzed = Analyze(clip);
  REQUIRE(converted.f0.size() == analyzed.f0.size());
  for (std::size_t i = 0; i < analyzed.f0.size(); ++i)
    CHECK((converted.f0.values[i] > 0) == (analyzed.f0.values[i] > 0));

  // Rebuilding the envelope from mcep alone loses detail above the order.
  config.differential_envelope = false;
  const AudioClip rebuilt = SanitizeClip(clip, ckpt, config);
  const double mcd = MelCepstralDistortion(Reanalyze(rebuilt, 24), Reanalyze(plain, 24));
  CHECK(std::isfinite(mcd));
  CHECK(mcd < 3.0);
}

TEST_CASE("silence stays near silent") {
  AudioClip silence;
  silence.sample_rate = 16000;
  silence.samples.assign(16000, 0.0);
  const AudioClip out = SanitizeClip(silence, IdentityCheckpoint(25), SanitizeConfig{});
  CHECK(Rms(out) < 1e-3);
  CHECK(CodeOf([] {
          SanitizeClip(AudioClip{}, IdentityCheckpoint(25), SanitizeConfig{});
        }) == ErrorCode::kEmptyInput);
}

TEST_CASE("toy shifted-domain model shifts sanitized mcep by half") {
  const int dims = 8;
  gan::Checkpoint ckpt = IdentityCheckpoint(dims);
  ckpt.spec.generator.output_init_scale = 1.0;
  gan::TrainConfig train;
  train.lambda_cyc = 10.0;
  train.lambda_id = 0.0;
  train.lr_generator = 2e-3;
  train.lr_discriminator = 1e-3;
  train.epochs = 100000;
  train.max_steps = 2000;
  train.batch_size = 16;
  train.segment_length = 16;
  train.decay_start = 0.3;
  train.seed = 1;
  std::mt19937_64 rng(42);
  std::vector<Matrix> x, y;
  for (int i = 0; i < 1024; ++i) x.push_back(ToySegment(rng, 16, dims));
  for (int i = 0; i < 1024; ++i) {
    Matrix m = ToySegment(rng, 16, dims);
    for (double &v : m.data()) v += 0.5;
    y.push_back(m);
  }
  gan::Trainer trainer(ckpt.spec, train);
  trainer.Train(x, y);
  ckpt.model = trainer.model();
  ckpt.config = train;

  // Center the clip's own mcep with unit scale so the shift stays +0.5 in
  // raw coefficients.
  const AudioClip clip = Voice(140.0, 9);
  const McepTrack mcep = Reanalyze(clip, dims - 1);
  gan::Checkpoint identity = IdentityCheckpoint(dims);
  for (int d = 0; d < dims; ++d) {
    double mean = 0.0;
    for (std::size_t t = 0; t < mcep.frames(); ++t) mean += mcep.values(t, d);
    mean /= mcep.frames();
    for (gan::Checkpoint *c : {&ckpt, &identity}) {
      c->stats.source.norm.mean[d] = mean;
      c->stats.target.norm.mean[d] = mean;
    }
  }
  const McepTrack shifted = Reanalyze(SanitizeClip(clip, ckpt, SanitizeConfig{}), dims - 1);
  const McepTrack plain = Reanalyze(SanitizeClip(clip, identity, SanitizeConfig{}), dims - 1);
  REQUIRE(shifted.frames() == plain.frames());
  double shift = 0.0;
  for (std::size_t t = 0; t < plain.frames(); ++t)
    for (int d = 0; d < dims; ++d) shift += shifted.values(t, d) - plain.values(t, d);
  shift /= static_cast<double>(plain.frames() * dims);
  CHECK(shift == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("batch isolates failures and mirrors paths") {
  const std::string dir = TempDir("batch");
  Corpus corpus = WriteClips(dir + "/in", {Voice(120, 1), Voice(160, 2), Voice(200, 3)});
  CorpusEntry bad = corpus.entries.front();
  bad.relative_path = "sub/corrupt.wav";
  bad.path = dir + "/in/sub/corrupt.wav";
  std::ofstream(bad.path) << "RIFF this is not audio";
  corpus.entries.insert(corpus.entries.begin() + 1, bad);

  SanitizeConfig config;
  config.output_dir = dir + "/out";
  const BatchReport report = SanitizeBatch(corpus, IdentityCheckpoint(25), config);
  CHECK(report.status() == "partial");
  CHECK(report.succeeded == 3);
  CHECK(report.failed == 1);
  REQUIRE(report.files.size() == 4);
  CHECK_FALSE(report.files[1].ok);
  CHECK_FALSE(report.files[1].error.empty());
  CHECK_FALSE(fs::exists(dir + "/out/sub/corrupt.wav"));
  for (std::size_t i : {0u, 2u, 3u}) {
    CHECK(report.files[i].ok);
    CHECK(fs::exists(dir + "/out/" + corpus.entries[i].relative_path));
  }
  WriteBatchReport(report, dir + "/out");
  const std::string csv = Slurp(dir + "/out/batch.csv");
  CHECK(csv.find("status partial") != std::string::npos);
  CHECK(csv == FormatBatchReport(report));

  CHECK(CodeOf([&] { SanitizeBatch(Corpus{}, IdentityCheckpoint(25), config); }) ==
        ErrorCode::kEmptyCorpus);
  std::ofstream(dir + "/blocker") << "x";
  config.output_dir = dir + "/blocker/out";
  CHECK(CodeOf([&] { SanitizeBatch(corpus, IdentityCheckpoint(25), config); }) ==
        ErrorCode::kOutputDirUnwritable);
}

TEST_CASE("batch output is deterministic and independent of threads") {
  const std::string dir = TempDir("determinism");
  const AudioClip clip = Voice(150, 4);
  const Corpus corpus = WriteClips(dir + "/in", {clip, clip, clip, clip});
  gan::Checkpoint ckpt = IdentityCheckpoint(25);
  ckpt.model.Initialize(11);  // a non-trivial map
  ckpt.stats.target.logf0.mean += 0.3;

  SanitizeConfig config;
  config.output_dir = dir + "/seq";
  REQUIRE(SanitizeBatch(corpus, ckpt, config).status() == "ok");
  config.output_dir = dir + "/par";
  config.threads = 3;
  REQUIRE(SanitizeBatch(corpus, ckpt, config).status() == "ok");
  const std::string first = Slurp(dir + "/seq/" + corpus.entries[0].relative_path);
  CHECK(first.size() > 44);
  for (const auto &e : corpus.entries) {
    CHECK(Slurp(dir + "/seq/" + e.relative_path) == first);
    CHECK(Slurp(dir + "/par/" + e.relative_path) == first);
  }
}

TEST_CASE("pipeline trains, converts and evaluates reproducibly") {
  const std::string dir = TempDir("workflow");
  SyntheticCorpusOptions options;
  options.speakers = 2;
  options.clips_per_domain = 8;
  options.duration_s = 0.5;
  const SyntheticCorpus corpus = WriteSyntheticCorpus(dir + "/corpus", options);

  PipelineConfig config;
  config.train.profile = "tiny";
  config.train.epochs = 2;
  config.Resolve();
  int steps = 0;
  const PipelineResult a = RunPipeline(corpus.emotional, corpus.neutral, config,
                                       dir + "/a", [&](const gan::StepRecord &) { ++steps; });
  const PipelineResult b = RunPipeline(corpus.emotional, corpus.neutral, config, dir + "/b");
  CHECK(steps == 16);
  CHECK(a.checkpoint.domain_x == "angry");
  CHECK(a.checkpoint.domain_y == "neutral");
  CHECK(a.batch.status() == "ok");
  CHECK(a.report.original_clips == 4);
  CHECK(a.report.sanitized_clips == 4);
  for (const char *file : {"model.ckpt", "loss_history.csv", "config.ini",
                           "report/report.txt", "report/metrics.csv"}) {
    CHECK_MESSAGE(fs::exists(dir + "/a/" + file), file);
    CHECK(Slurp(dir + "/a/" + file) == Slurp(dir + "/b/" + file));
  }
  for (const auto &e : corpus.emotional.entries)
    CHECK(Slurp(dir + "/a/sanitized/" + e.relative_path) ==
          Slurp(dir + "/b/sanitized/" + e.relative_path));
  const PipelineConfig reread = LoadConfig(dir + "/a/config.ini");
  CHECK(ConfigFingerprint(reread) == ConfigFingerprint(config));
  CHECK(a.report.config_fingerprint == ConfigFingerprint(config));

  const gan::Checkpoint loaded = gan::LoadCheckpoint(dir + "/a/model.ckpt");
  CHECK(gan::EncodeCheckpoint(loaded) == gan::EncodeCheckpoint(a.checkpoint));
}
