// tests/acceptance.cc

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

// Acceptance run: prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails. Usage: acceptance [path-to-voxsan-cli]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "gradient_check.h"
#include "voxsan/corpus/manifest.h"
#include "voxsan/corpus/wav.h"
#include "voxsan/eval/eer.h"
#include "voxsan/eval/mcd.h"
#include "voxsan/eval/wer.h"
#include "voxsan/features/mcep.h"
#include "voxsan/gan/gradients.h"
#include "voxsan/gan/trainer.h"
#include "voxsan/pipeline/sanitize.h"
#include "voxsan/pipeline/workflow.h"
#include "voxsan/synth/synthetic_corpus.h"
#include "voxsan/vocoder/f0.h"

using namespace voxsan;
namespace fs = std::filesystem;

namespace {

constexpr int kRate = 16000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string Format(const char *fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), fmt, args...);
  return buf;
}

std::string Slurp(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

const fs::path &WorkDir() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / "voxsan_acceptance";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

McepTrack Mcep(const AudioClip &clip) { return EnvelopeToMcep(Analyze(clip).envelope); }

Outcome VocoderRoundTrip() {
  static const Formants kVowels[] = {{730, 1090, 2440}, {270, 2290, 3010},
                                     {530, 1840, 2480}, {570, 840, 2410},
                                     {300, 870, 2240}};
  const auto start = Clock::now();
  double total = 0.0, worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double f0 = 90.0 + i * (300.0 - 90.0) / 19.0;
    // Stored as 16-bit PCM like every clip the pipeline reads.
    const AudioClip original =
        DecodeWav(EncodeWav16(SteadyVowel(f0, kVowels[i % 5], 1.0, kRate)));
    const AudioClip resynth = Synthesize(Analyze(original));
    const double mcd = MelCepstralDistortion(Mcep(original), Mcep(resynth));
    total += mcd;
    worst = std::max(worst, mcd);
  }
  const double mean = total / 20.0, seconds = Since(start);
  return {mean < 3.0 && seconds < 60.0,
          Format("mean MCD %.3f dB (worst %.3f) over 20 16-bit vowels, F0 90-300 Hz, %.1f s",
                 mean, worst, seconds)};
}

AudioClip HarmonicTone(double f0) {
  AudioClip c;
  c.samples.resize(kRate);
  for (std::size_t i = 0; i < c.samples.size(); ++i) {
    double x = 0.0;
    for (int h = 1; h <= 20 && h * f0 < kRate / 2; ++h)
      x += std::sin(2.0 * std::numbers::pi * f0 * h * i / kRate) / h;
    c.samples[i] = 0.3 * x;
  }
  return c;
}

Outcome F0Accuracy() {
  double worst = 0.0;
  for (double hz : {100.0, 150.0, 220.0, 330.0, 440.0}) {
    std::vector<double> errors;
    for (double v : EstimateF0(HarmonicTone(hz)).values)
      if (v > 0.0) errors.push_back(std::abs(v - hz) / hz);
    if (errors.empty()) return {false, Format("no voiced frames at %.0f Hz", hz)};
    std::nth_element(errors.begin(), errors.begin() + errors.size() / 2, errors.end());
    worst = std::max(worst, errors[errors.size() / 2]);
  }
  AudioClip silence, noise;
  silence.samples.assign(kRate, 0.0);
  noise.samples.resize(kRate);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal(0.0, 0.1);
  for (double &s : noise.samples) s = normal(rng);
  const std::size_t voiced_silence = EstimateF0(silence).VoicedCount();
  const std::size_t voiced_noise = EstimateF0(noise).VoicedCount();
  return {worst < 0.02 && voiced_silence == 0 && voiced_noise == 0,
          Format("worst median relative error %.4f%%; voiced frames: silence %zu, noise %zu",
                 100.0 * worst, voiced_silence, voiced_noise)};
}

gan::Tensor<double> RandomTensor(int n, int c, int t, std::uint64_t seed, double offset) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  gan::Tensor<double> x(n, c, t);
  for (double &v : x.v) v = normal(rng) + offset;
  return x;
}

Outcome GradientCheck() {
  const auto start = Clock::now();
  gan::CycleGan<double> model(gan::ProfileSpec("tiny", 8));
  model.Initialize(3);
  const auto x = RandomTensor(2, 8, 16, 5, 0.0);
  const auto y = RandomTensor(2, 8, 16, 6, 0.5);
  const auto result = gan::CheckGradients(model, x, y, 10.0, 5.0, 1e-5);
  const double seconds = Since(start);
  return {result.worst < 1e-4 && seconds < 120.0,
          Format("%zu parameters (%zu with a step narrowed below an L1 kink), worst "
                 "relative error %.2e, %.1f s",
                 result.checked, result.refined, result.worst, seconds)};
}

Outcome AffineLoss() {
  gan::CycleGan<double> model(gan::ProfileSpec("tiny", 8));
  model.Initialize(2);
  const auto x = RandomTensor(2, 8, 16, 1, 0.0);
  const auto y = RandomTensor(2, 8, 16, 2, 0.5);
  const auto l0 = gan::EvaluateLosses(model, x, y, 0.0, 5.0);
  const auto l1 = gan::EvaluateLosses(model, x, y, 1.0, 5.0);
  const auto l2 = gan::EvaluateLosses(model, x, y, 2.0, 5.0);
  const double dev = std::max(std::abs(l1.full - l0.full - l0.cycle),
                              std::abs(l2.full - l1.full - l0.cycle));
  return {dev < 1e-9, Format("cycle term %.6f, largest slope deviation %.2e", l0.cycle, dev)};
}

Matrix ToySegment(std::mt19937_64 &rng, int dims) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(16, dims);
  for (int d = 0; d < dims; ++d) {
    double v = normal(rng);
    for (int t = 0; t < 16; ++t) {
      v = 0.8 * v + 0.6 * normal(rng);
      m(t, d) = 0.5 * v;
    }
  }
  return m;
}

Outcome ToyConversion() {
  const auto start = Clock::now();
  const int dims = 8;
  gan::ModelSpec spec = gan::ProfileSpec("tiny", dims);
  spec.generator.output_init_scale = 1.0;
  gan::TrainConfig config;
  config.lambda_cyc = 10.0;
  config.lambda_id = 0.0;
  config.lr_generator = 2e-3;
  config.lr_discriminator = 1e-3;
  config.epochs = 100000;
  config.max_steps = 2000;
  config.batch_size = 16;
  config.segment_length = 16;
  config.decay_start = 0.3;
  std::mt19937_64 rng(42);
  std::vector<Matrix> x, y, held_out;
  for (int i = 0; i < 1024; ++i) x.push_back(ToySegment(rng, dims));
  for (int i = 0; i < 1024; ++i) {
    Matrix m = ToySegment(rng, dims);
    for (double &v : m.data()) v += 0.5;
    y.push_back(m);
  }
  for (int i = 0; i < 32; ++i) held_out.push_back(ToySegment(rng, dims));
  gan::Trainer trainer(spec, config);
  trainer.Train(x, y);

  const auto batch = gan::ToBatch(held_out);
  const auto out = trainer.model().g.Forward(batch);
  double mae = 0.0;
  for (std::size_t i = 0; i < out.v.size(); ++i) mae += std::abs(out.v[i] - batch.v[i] - 0.5);
  mae /= static_cast<double>(out.v.size());
  const auto &history = trainer.history();
  double tail = 0.0;
  const std::size_t window = 50;
  for (std::size_t i = history.size() - window; i < history.size(); ++i)
    tail += history[i].losses.cycle;
  tail /= window;
  const double ratio = tail / history.front().losses.cycle;
  const double seconds = Since(start);
  return {mae < 0.05 && ratio < 0.1 && seconds < 1800.0,
          Format("%zu steps, held-out MAE %.4f, cycle loss %.2f%% of initial, %.1f s",
                 history.size(), mae, 100.0 * ratio, seconds)};
}

// Criteria 6, 7 and 9 share two identical pipeline runs on one corpus.
struct PipelineRuns {
  SyntheticCorpus corpus;
  PipelineConfig config;
  PipelineResult a;
  fs::path dir_a, dir_b;
  double seconds = 0.0;
  std::optional<double> stats_only_accuracy;
};

const PipelineRuns &Runs() {
  static const PipelineRuns runs = [] {
    PipelineRuns r;
    SyntheticCorpusOptions options;  // 4 speakers, 40 clips per domain
    r.corpus = WriteSyntheticCorpus((WorkDir() / "corpus").string(), options);
    // One set of mcep statistics for both domains, so the spectral
    // conversion is carried by the generator rather than the normalization.
    r.config.features.normalization = "shared";
    r.config.train.epochs = 50;
    r.config.Resolve();
    r.dir_a = WorkDir() / "run_a";
    r.dir_b = WorkDir() / "run_b";
    const auto start = Clock::now();
    r.a = RunPipeline(r.corpus.emotional, r.corpus.neutral, r.config, r.dir_a.string());
    r.seconds = Since(start);
    RunPipeline(r.corpus.emotional, r.corpus.neutral, r.config, r.dir_b.string());
    return r;
  }();
  return runs;
}

Outcome PrivacyDrop() {
  const PipelineRuns &r = Runs();
  const EvaluationReport &rep = r.a.report;
  return {rep.accuracy_original >= 0.95 && rep.accuracy_sanitized <= 0.4,
          Format("emotion accuracy %.3f original -> %.3f sanitized on %d held-out clips "
                 "(small profile, %s normalization, %d epochs, %zu steps, pipeline %.1f s)",
                 rep.accuracy_original, rep.accuracy_sanitized, rep.original_clips,
                 r.config.features.normalization.c_str(), r.config.train.epochs, r.a.checkpoint.history.size(), r.seconds)};
}

// Same trained statistics with both generators reduced to the identity map:
// how much of the drop the normalization alone produces.
std::string StatsOnlyBaseline() {
  const PipelineRuns &r = Runs();
  gan::Checkpoint ckpt = r.a.checkpoint;
  for (gan::Generator<float> *g : {&ckpt.model.g, &ckpt.model.f})
    for (const auto &slot : g->layout().slots())
      if (slot.name.rfind("out.", 0) == 0)
        std::fill_n(g->params().begin() + slot.offset, slot.size, 0.0f);
  const std::string dir = (WorkDir() / "stats_only").string();
  SanitizeBatch(r.corpus.emotional, ckpt, MakeSanitizeConfig(r.config, dir));
  const EvaluationReport rep =
      EvaluateCorpora(r.corpus.emotional, r.corpus.neutral, dir, r.config);
  return Format("identity generators with the trained statistics: accuracy %.3f, "
                "MCD %.3f dB (trained model: MCD %.3f dB)",
                rep.accuracy_sanitized, rep.mean_mcd, r.a.report.mean_mcd);
}

Outcome UtilityProxies() {
  const EvaluationReport &rep = Runs().a.report;
  if (!rep.eer_original || !rep.eer_sanitized) return {false, "EER absent"};
  if (!rep.wer_original || !rep.wer_sanitized) return {false, "WER absent"};
  const double delta = std::abs(*rep.eer_sanitized - *rep.eer_original);
  return {delta <= 0.1 && *rep.wer_original == 0.0 && *rep.wer_sanitized == 0.0,
          Format("EER %.4f -> %.4f (delta %.4f); %s WER %.3f / %.3f", *rep.eer_original,
                 *rep.eer_sanitized, delta, rep.provider.c_str(), *rep.wer_original,
                 *rep.wer_sanitized)};
}

Outcome MetricExactness() {
  const std::vector<double> genuine = {0.9, 0.8, 0.2}, impostor = {0.7, 0.3, 0.1};
  const double eer = EqualErrorRate(genuine, impostor);
  const double wer = WordErrorRate(std::vector<std::string>{"kids", "are", "talking", "here"},
                                   std::vector<std::string>{"kids", "are", "walking", "here"});
  McepTrack a;
  a.values = Matrix(10, 25);
  std::mt19937_64 rng(1);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (double &v : a.values.data()) v = normal(rng);
  const double mcd = MelCepstralDistortion(a, a);
  return {eer == 1.0 / 3.0 && wer == 0.25 && mcd == 0.0,
          Format("eer %.17g, wer %.17g, mcd(a,a) %.17g", eer, wer, mcd)};
}

Outcome Determinism() {
  const PipelineRuns &r = Runs();
  std::vector<fs::path> files = {"model.ckpt", "loss_history.csv"};
  for (const auto &entry : fs::directory_iterator(r.dir_a / "report"))
    files.push_back(fs::path("report") / entry.path().filename());
  for (const auto &e : r.corpus.emotional.entries)
    files.push_back(fs::path("sanitized") / e.relative_path);
  std::size_t differing = 0;
  for (const auto &f : files) {
    const std::string a = Slurp(r.dir_a / f);
    if (a.empty() || a != Slurp(r.dir_b / f)) ++differing;
  }
  return {differing == 0,
          Format("%zu artifacts compared across two seeded runs (checkpoint, loss history, "
                 "%zu WAVs, report files), %zu differ",
                 files.size(), r.corpus.emotional.size(), differing)};
}

Outcome BatchRobustness(const std::string &cli) {
  const PipelineRuns &r = Runs();
  const fs::path dir = WorkDir() / "batch";
  fs::create_directories(dir);
  Corpus corpus;
  corpus.root_dir = r.corpus.emotional.root_dir;
  for (int i = 0; i < 3; ++i) corpus.entries.push_back(r.corpus.emotional.entries[i]);
  CorpusEntry bad = corpus.entries.back();
  bad.relative_path = "angry/corrupt.wav";
  bad.path = (fs::path(corpus.root_dir) / bad.relative_path).string();
  std::ofstream(bad.path) << "RIFF????WAVEjunk";
  corpus.entries.insert(corpus.entries.begin() + 1, bad);

  const BatchReport report =
      SanitizeBatch(corpus, r.a.checkpoint, MakeSanitizeConfig(r.config, (dir / "lib").string()));
  std::size_t outputs = 0;
  for (const auto &f : report.files)
    if (f.ok && fs::exists(f.output_path)) ++outputs;
  bool ok = outputs == 3 && report.failed == 1 && report.status() == "partial";
  std::string detail = Format("%zu outputs, %d failure(s), status %s", outputs, report.failed,
                              report.status().c_str());

  if (!cli.empty()) {
    const std::string manifest = (dir / "batch.csv").string();
    WriteManifest(corpus, manifest);
    const std::string command = "\"" + cli + "\" convert -q --ckpt \"" +
                                (r.dir_a / "model.ckpt").string() + "\" --in \"" + manifest +
                                "\" --out \"" + (dir / "cli").string() + "\" > /dev/null 2>&1";
    const int status = std::system(command.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    ok = ok && code == 2;
    detail += Format("; CLI exit code %d", code);
  }
  return {ok, detail};
}

}  // namespace

int main(int argc, char **argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"vocoder round trip", VocoderRoundTrip},
      {"F0 accuracy", F0Accuracy},
      {"gradient correctness", GradientCheck},
      {"full loss affine in lambda", AffineLoss},
      {"toy shifted-domain conversion", ToyConversion},
      {"desk-scale privacy drop", PrivacyDrop},
      {"utility preservation proxies", UtilityProxies},
      {"metric exactness", MetricExactness},
      {"pipeline determinism", Determinism},
      {"batch robustness", [&] { return BatchRobustness(cli); }},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception &e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failures;
    std::printf("%s %2zu %s: %s\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), outcome.detail.c_str());
    std::fflush(stdout);
    if (i == 5) {
      try {
        std::printf("info    %s\n", StatsOnlyBaseline().c_str());
      } catch (const std::exception &e) {
        std::printf("info    stats-only baseline failed: %s\n", e.what());
      }
    }
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
