// tests/eval_test.cc

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

#include <httplib.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>
#include <thread>

#include "doctest.h"
#include "voxsan/common/error.h"
#include "voxsan/eval/classifier.h"
#include "voxsan/eval/eer.h"
#include "voxsan/eval/mcd.h"
#include "voxsan/eval/report.h"
#include "voxsan/eval/speaker.h"
#include "voxsan/eval/summary.h"
#include "voxsan/eval/transcription.h"
#include "voxsan/eval/wer.h"
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

McepTrack RandomTrack(std::mt19937_64 &rng, std::size_t frames, int order = 24) {
  std::normal_distribution<double> normal(0.0, 0.3);
  McepTrack t;
  t.values = Matrix(frames, order + 1);
  for (double &v : t.values.data()) v = normal(rng);
  return t;
}

// Small two-domain corpus on disk, generated once per test run.
const SyntheticCorpus &SmallCorpus() {
  static const SyntheticCorpus corpus = [] {
    SyntheticCorpusOptions options;
    options.speakers = 3;
    options.clips_per_domain = 12;
    options.duration_s = 0.6;
    const std::string dir = (fs::temp_directory_path() / "voxsan_eval_test").string();
    fs::remove_all(dir);
    return WriteSyntheticCorpus(dir, options);
  }();
  return corpus;
}

Corpus Combined() {
  Corpus all = SmallCorpus().emotional;
  for (const auto &e : SmallCorpus().neutral.entries) all.entries.push_back(e);
  return all;
}

}  // namespace

TEST_CASE("mcd: closed forms and metric properties") {
  std::mt19937_64 rng(1);
  const McepTrack a = RandomTrack(rng, 50);
  CHECK(MelCepstralDistortion(a, a) == 0.0);

  McepTrack b = a;
  const double delta = 0.3;
  b.values(17, 5) += delta;
  const double expected = 10.0 / std::numbers::ln10 * std::sqrt(2.0) * delta / 50.0;
  CHECK(MelCepstralDistortion(a, b) == doctest::Approx(expected).epsilon(1e-12));

  McepTrack energy = a;
  energy.values(3, 0) += 5.0;
  CHECK(MelCepstralDistortion(a, energy) == 0.0);

  McepTrack longer = a;
  longer.values = Matrix(80, 25, 7.0);
  for (std::size_t t = 0; t < 50; ++t)
    for (int d = 0; d < 25; ++d) longer.values(t, d) = a.values(t, d);
  CHECK(MelCepstralDistortion(a, longer) == 0.0);

  for (int trial = 0; trial < 20; ++trial) {
    const McepTrack x = RandomTrack(rng, 30), y = RandomTrack(rng, 30),
                    z = RandomTrack(rng, 30);
    const double xy = MelCepstralDistortion(x, y);
    CHECK(xy > 0.0);
    CHECK(xy == MelCepstralDistortion(y, x));
    CHECK(MelCepstralDistortion(x, z) <= xy + MelCepstralDistortion(y, z) + 1e-12);
  }

  CHECK(CodeOf([&] { MelCepstralDistortion(a, RandomTrack(rng, 50, 12)); }) ==
        ErrorCode::kOrderMismatch);
  McepTrack warped = a;
  warped.warp = 0.55;
  CHECK(CodeOf([&] { MelCepstralDistortion(a, warped); }) ==
        ErrorCode::kOrderMismatch);
}

TEST_CASE("eer: worked examples") {
  const std::vector<double> g = {0.9, 0.8, 0.2}, i = {0.7, 0.3, 0.1};
  CHECK(EqualErrorRate(g, i) == 1.0 / 3.0);

  // Brute force: the threshold where the two error rates meet.
  double best = 1.0;
  for (double t : {0.1, 0.2, 0.3, 0.7, 0.8, 0.9}) {
    int fr = 0, fa = 0;
    for (double s : g) fr += s < t;
    for (double s : i) fa += s >= t;
    if (fr == fa) best = std::min(best, fr / 3.0);
  }
  CHECK(best == 1.0 / 3.0);

  CHECK(EqualErrorRate(std::vector<double>{0.9, 0.95},
                       std::vector<double>{0.1, 0.5}) == 0.0);
  const std::vector<double> same = {0.1, 0.4, 0.45, 0.8};
  CHECK(EqualErrorRate(same, same) == doctest::Approx(0.5));
  CHECK(EqualErrorRate(std::vector<double>{0.1}, std::vector<double>{0.9}) ==
        doctest::Approx(1.0));

  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> gen, imp;
  for (int k = 0; k < 200; ++k) gen.push_back(normal(rng) + 1.0);
  for (int k = 0; k < 150; ++k) imp.push_back(normal(rng));
  const double base = EqualErrorRate(gen, imp);
  CHECK(base > 0.2);
  CHECK(base < 0.45);
  auto transform = [](std::vector<double> v) {
    for (double &s : v) s = std::exp(3.0 * s) + 2.0;
    return v;
  };
  CHECK(EqualErrorRate(transform(gen), transform(imp)) == doctest::Approx(base).epsilon(1e-12));

  CHECK(CodeOf([] { EqualErrorRate({}, std::vector<double>{1.0}); }) ==
        ErrorCode::kEmptyScores);
}

TEST_CASE("wer: worked examples") {
  CHECK(WordErrorRate("kids are talking by the door",
                      "kids are talking by the door") == 0.0);
  CHECK(WordErrorRate("dogs are sitting down", "dogs are standing down") == 0.25);
  CHECK(WordErrorRate("a b", "") == 1.0);
  CHECK(WordErrorRate("Kids, are TALKING!", "kids are talking") == 0.0);
  CHECK(WordErrorRate("one two three", "one two three four five") ==
        doctest::Approx(2.0 / 3.0));

  const auto counts = AlignWords(NormalizeWords("a b c d"), NormalizeWords("a x c"));
  CHECK(counts.substitutions == 1);
  CHECK(counts.deletions == 1);
  CHECK(counts.insertions == 0);

  CHECK(NormalizeWords("Don't  stop.") == std::vector<std::string>{"dont", "stop"});
  CHECK(CodeOf([] { WordErrorRate("", "a"); }) == ErrorCode::kEmptyReference);
  CHECK(CodeOf([] { WordErrorRate("?!", "a"); }) == ErrorCode::kEmptyReference);
}

TEST_CASE("summary: order-free statistics") {
  F0Track f0;
  f0.values = {0, 200, 200, 200, 0};
  McepTrack mcep;
  mcep.values = Matrix(5, 4);
  std::mt19937_64 rng(2);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (double &v : mcep.values.data()) v = normal(rng);

  const auto s = SummarizeClip(f0, mcep);
  REQUIRE(s.size() == SummaryLength(3));
  CHECK(SummaryFieldNames(3).size() == s.size());
  CHECK(s[0] == 200.0);
  CHECK(s[1] == 0.0);
  CHECK(s[2] == 0.0);
  CHECK(s[3] == 0.0);

  F0Track rf0 = f0;
  std::reverse(rf0.values.begin(), rf0.values.end());
  McepTrack rmcep = mcep;
  for (std::size_t t = 0; t < 5; ++t)
    for (int d = 0; d < 4; ++d) rmcep.values(t, d) = mcep.values(4 - t, d);
  CHECK(SummarizeClip(rf0, rmcep) == s);

  F0Track silent;
  silent.values = {0, 0, 0, 0, 0};
  const auto u = SummarizeClip(silent, mcep);
  CHECK(u[0] == 0.0);
  CHECK(u[3] == 1.0);
}

TEST_CASE("summary: F0 mean follows the synthetic voice") {
  VoiceSpec neutral;
  neutral.f0_hz = 140.0;
  neutral.duration_s = 0.6;
  VoiceSpec angry = neutral;
  angry.f0_hz = 280.0;
  const auto a = ExtractClipSummary(Analyze(SynthesizeVoice(angry, 1)));
  const auto n = ExtractClipSummary(Analyze(SynthesizeVoice(neutral, 1)));
  CHECK(a[0] / n[0] == doctest::Approx(2.0).epsilon(0.03));
}

TEST_CASE("classifier: separable data, permuted labels, errors") {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto sample = [&](int label) {
    std::vector<double> s(10);
    for (double &v : s) v = normal(rng);
    s[0] += label == 0 ? -3.0 : 3.0;
    return s;
  };
  std::vector<std::vector<double>> train;
  std::vector<Emotion> labels;
  for (int k = 0; k < 40; ++k) {
    train.push_back(sample(k % 2));
    labels.push_back(k % 2 ? Emotion::kAngry : Emotion::kNeutral);
  }
  const auto clf = TrainEmotionClassifier(train, labels);
  CHECK(clf.gradient_norm < 1e-6);
  int correct = 0;
  for (std::size_t k = 0; k < train.size(); ++k) {
    const auto p = ClassifyEmotion(clf, train[k]);
    correct += p.label == labels[k];
    double total = 0.0;
    for (double v : p.probabilities) total += v;
    CHECK(std::abs(total - 1.0) < 1e-9);
  }
  CHECK(correct == 40);
  CHECK(ClassifyEmotion(clf, train[3]).probabilities ==
        ClassifyEmotion(clf, train[3]).probabilities);

  // Permute the labels of a whole corpus, train on part of it and score the
  // rest against the permuted labels: without leakage this is a coin flip.
  const int held = 400;
  std::vector<std::vector<double>> pool;
  std::vector<Emotion> pool_labels;
  for (int k = 0; k < 40 + held; ++k) {
    pool.push_back(sample(k % 2));
    pool_labels.push_back(k % 2 ? Emotion::kAngry : Emotion::kNeutral);
  }
  std::mt19937_64 perm(9);
  for (std::size_t k = pool_labels.size(); k > 1; --k)
    std::swap(pool_labels[k - 1], pool_labels[perm() % k]);
  const auto noise = TrainEmotionClassifier(
      {pool.begin(), pool.begin() + 40},
      {pool_labels.begin(), pool_labels.begin() + 40});
  int hits = 0;
  for (int k = 40; k < 40 + held; ++k)
    hits += ClassifyEmotion(noise, pool[k]).label == pool_labels[k];
  const double se = std::sqrt(0.25 / held);
  CHECK(std::abs(hits / static_cast<double>(held) - 0.5) < 3 * se);

  const auto zero = EmotionClassifier::Zero(10);
  for (double p : ClassifyEmotion(zero, train[0]).probabilities)
    CHECK(p == doctest::Approx(1.0 / 8));

  std::vector<Emotion> one(40, Emotion::kSad);
  CHECK(CodeOf([&] { TrainEmotionClassifier(train, one); }) ==
        ErrorCode::kInsufficientData);
  std::vector<std::vector<double>> few(train.begin(), train.begin() + 6);
  std::vector<Emotion> few_labels(labels.begin(), labels.begin() + 6);
  CHECK(CodeOf([&] { TrainEmotionClassifier(few, few_labels); }) ==
        ErrorCode::kInsufficientData);
  CHECK(CodeOf([&] { ClassifyEmotion(clf, std::vector<double>(9)); }) ==
        ErrorCode::kShapeMismatch);
}

TEST_CASE("classifier: synthetic clips are separable") {
  ReportOptions options;
  const auto clips = AnalyzeCorpus(Combined(), options);
  const auto clf = TrainEmotionClassifier(clips);
  int correct = 0;
  for (const auto &c : clips)
    correct += ClassifyEmotion(clf, c.summary).label == c.entry.labels.emotion;
  CHECK(correct == static_cast<int>(clips.size()));
  CHECK(clf.training_keys.size() == clips.size());
}

TEST_CASE("speaker: trial construction") {
  std::vector<SpeakerEmbedding> e = {
      {{1, 0, 0}, "a"}, {{1, 0, 0}, "a"}, {{0, 1, 0}, "b"}, {{0, 1, 0}, "b"}};
  const auto trials = SpeakerScores(e, 1);
  REQUIRE(trials.genuine.size() == 2);
  CHECK(trials.genuine[0] == 1.0);
  CHECK(trials.genuine[1] == 1.0);
  REQUIRE(trials.impostor.size() == 2);
  CHECK(trials.impostor[0] == 0.0);

  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<SpeakerEmbedding> many;
  for (int k = 0; k < 30; ++k) {
    SpeakerEmbedding s;
    s.speaker_id = "s" + std::to_string(k % 5);
    for (int d = 0; d < 8; ++d) s.values.push_back(normal(rng));
    many.push_back(s);
  }
  NormalizeEmbeddings(many);
  for (const auto &s : many) {
    double norm = 0.0;
    for (double v : s.values) norm += v * v;
    CHECK(norm == doctest::Approx(1.0));
  }
  const auto t1 = SpeakerScores(many, 11), t2 = SpeakerScores(many, 11);
  CHECK(t1.impostor == t2.impostor);
  CHECK(t1.impostor.size() == t1.genuine.size());
  CHECK(SpeakerScores(many, 12).impostor != t1.impostor);

  std::vector<SpeakerEmbedding> lonely = {{{1, 0}, "a"}, {{1, 0}, "a"}, {{0, 1}, "b"}};
  CHECK(CodeOf([&] { SpeakerScores(lonely, 1); }) ==
        ErrorCode::kInsufficientSpeakers);
}

TEST_CASE("transcription: stub, cache and HTTP") {
  StubTranscriber stub;
  stub.Add("a.wav", {"kids", "are", "talking"});
  AudioClip clip;
  clip.samples.assign(1600, 0.1);
  CHECK(stub.Transcribe(clip, {"a.wav"}) ==
        std::vector<std::string>{"kids", "are", "talking"});
  CHECK(stub.Transcribe(clip, {"b.wav"}).empty());

  const std::string dir = (fs::temp_directory_path() / "voxsan_stt_cache").string();
  fs::remove_all(dir);
  {
    CachedTranscriber cached(stub, dir);
    cached.Transcribe(clip, {"a.wav"});
    CHECK(cached.misses() == 1);
    CHECK(cached.Transcribe(clip, {"a.wav"}) ==
          std::vector<std::string>{"kids", "are", "talking"});
    CHECK(cached.hits() == 1);
  }
  {
    CachedTranscriber reopened(stub, dir);
    reopened.Transcribe(clip, {"a.wav"});
    CHECK(reopened.hits() == 1);
    CHECK(reopened.misses() == 0);
  }
  fs::remove_all(dir);

  httplib::Server server;
  server.Post("/stt", [](const httplib::Request &req, httplib::Response &res) {
    if (req.get_header_value("X-Language") != "en-US" ||
        req.body.substr(0, 4) != "RIFF") {
      res.status = 400;
      return;
    }
    res.set_content(R"({"transcript": "hello there world"})", "application/json");
  });
  server.Post("/slow", [](const httplib::Request &, httplib::Response &res) {
    std::this_thread::sleep_for(std::chrono::milliseconds(1500));
    res.set_content(R"({"words": []})", "application/json");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  HttpTranscriber http({"http://127.0.0.1:" + std::to_string(port) + "/stt"});
  CHECK(http.Transcribe(clip, {"a.wav"}) ==
        std::vector<std::string>{"hello", "there", "world"});
  HttpTranscriberOptions slow_options;
  slow_options.url = "http://127.0.0.1:" + std::to_string(port) + "/slow";
  slow_options.timeout_seconds = 0.3;
  HttpTranscriber slow(slow_options);
  CHECK(CodeOf([&] { slow.Transcribe(clip, {"a.wav"}); }) ==
        ErrorCode::kProviderTimeout);
  server.stop();
  worker.join();

  HttpTranscriber nowhere({"http://127.0.0.1:" + std::to_string(port) + "/stt"});
  CHECK(CodeOf([&] { nowhere.Transcribe(clip, {"a.wav"}); }) ==
        ErrorCode::kProviderUnavailable);
}

TEST_CASE("report: self-comparison and protocol") {
  const Corpus all = Combined();
  const CorpusSplit split = SplitCorpus(all, 0.5, 3);
  CHECK(split.train.size() + split.test.size() == all.size());
  for (const auto &t : split.test.entries)
    for (const auto &r : split.train.entries) CHECK(t.path != r.path);

  ReportOptions options;
  const auto train = AnalyzeCorpus(split.train, options);
  const auto test = AnalyzeCorpus(split.test, options);
  const auto clf = TrainEmotionClassifier(train);
  StubTranscriber stub(all);
  const auto report = PrivacyUtilityReport(test, test, clf, &stub, options);
  CHECK(report.original_clips == test.size());
  CHECK(report.accuracy_drop == 0.0);
  CHECK(report.mean_mcd == 0.0);
  REQUIRE(report.eer_delta.has_value());
  CHECK(*report.eer_delta == 0.0);
  REQUIRE(report.wer_original.has_value());
  CHECK(*report.wer_original == 0.0);
  CHECK(*report.wer_sanitized == 0.0);
  CHECK(report.provider == "offline-stub");

  const std::string out = (fs::temp_directory_path() / "voxsan_report_test").string();
  fs::remove_all(out);
  WriteReport(report, out);
  for (const char *name : {"report.txt", "clips.csv", "metrics.csv", "figure.csv"})
    CHECK(fs::exists(fs::path(out) / name));
  CHECK(FormatReport(report) == FormatReport(report));
  fs::remove_all(out);

  auto missing = test;
  missing.pop_back();
  CHECK(CodeOf([&] { PrivacyUtilityReport(test, missing, clf, &stub, options); }) ==
        ErrorCode::kCorpusMismatch);
  CHECK(CodeOf([&] { PrivacyUtilityReport(train, train, clf, &stub, options); }) ==
        ErrorCode::kProtocolViolation);

  HttpTranscriber nowhere({"http://127.0.0.1:1/stt", "VOXSAN_STT_TOKEN", 0.5});
  const auto degraded = PrivacyUtilityReport(test, test, clf, &nowhere, options);
  CHECK_FALSE(degraded.wer_original.has_value());
  CHECK(degraded.accuracy_original == report.accuracy_original);
  CHECK_FALSE(degraded.notes.empty());
}
