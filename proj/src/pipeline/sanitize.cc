// src/pipeline/sanitize.cc

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

#include "voxsan/pipeline/sanitize.h"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "voxsan/common/error.h"
#include "voxsan/common/parallel.h"
#include "voxsan/corpus/resample.h"
#include "voxsan/corpus/wav.h"
#include "voxsan/features/f0_stats.h"
#include "voxsan/features/normalize.h"
#include "voxsan/features/segments.h"
#include "voxsan/gan/trainer.h"
#include "voxsan/vocoder/feature_io.h"

namespace voxsan {

namespace fs = std::filesystem;

namespace {

constexpr int kAnalysisRate = 16000;

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since)
      .count();
}

}  // namespace

McepTrack ConvertMcep(const McepTrack &mcep, const gan::Checkpoint &ckpt,
                      Direction direction) {
  const bool forward = direction == Direction::kXToY;
  const DomainStats &src = forward ? ckpt.stats.source : ckpt.stats.target;
  const DomainStats &tgt = forward ? ckpt.stats.target : ckpt.stats.source;
  const auto &net = forward ? ckpt.model.g : ckpt.model.f;
  const std::size_t dims = static_cast<std::size_t>(net.spec().dims);
  if (mcep.values.cols() != dims || src.norm.dims() != dims ||
      tgt.norm.dims() != dims)
    throw Error(ErrorCode::kShapeMismatch,
                "mcep order does not match the checkpoint");
  McepTrack out = mcep;
  const std::size_t frames = mcep.frames();
  if (frames == 0) return out;

  const Matrix normalized = ApplyNorm(mcep.values, src.norm);
  const std::size_t length = static_cast<std::size_t>(ckpt.spec.segment_length);
  std::vector<Matrix> windows;
  for (std::size_t start = 0; start < frames; start += length)
    windows.push_back(Window(normalized, start, length));
  const gan::Tensor<float> converted = net.Forward(gan::ToBatch(windows));
  Matrix joined(frames, dims);
  for (std::size_t w = 0; w < windows.size(); ++w) {
    const Matrix part = gan::FromBatch(converted, static_cast<int>(w));
    for (std::size_t t = 0; t < length && w * length + t < frames; ++t)
      for (std::size_t d = 0; d < dims; ++d) joined(w * length + t, d) = part(t, d);
  }
  out.values = InvertNorm(joined, tgt.norm);
  return out;
}

VocoderFeatures ConvertFeatures(const VocoderFeatures &features,
                                const gan::Checkpoint &ckpt,
                                Direction direction, bool differential) {
  features.Validate();
  const bool forward = direction == Direction::kXToY;
  const DomainStats &src = forward ? ckpt.stats.source : ckpt.stats.target;
  const DomainStats &tgt = forward ? ckpt.stats.target : ckpt.stats.source;
  const int order = ckpt.spec.generator.dims - 1;
  VocoderFeatures out = features;
  const McepTrack mcep = EnvelopeToMcep(features.envelope, order, ckpt.warp);
  const int fft_size = features.envelope.fft_size;
  out.envelope = McepToEnvelope(ConvertMcep(mcep, ckpt, direction), fft_size);
  if (differential) {
    const SpectralEnvelope smooth = McepToEnvelope(mcep, fft_size);
    Matrix &env = out.envelope.values;
    for (std::size_t t = 0; t < env.rows(); ++t)
      for (std::size_t k = 0; k < env.cols(); ++k)
        env(t, k) *= features.envelope.values(t, k) / smooth.values(t, k);
  }
  out.f0 = ConvertLogF0(features.f0, src.logf0, tgt.logf0);
  return out;
}

AudioClip SanitizeClip(const AudioClip &clip, const gan::Checkpoint &ckpt,
                       const SanitizeConfig &config,
                       VocoderFeatures *converted) {
  if (clip.samples.empty())
    throw Error(ErrorCode::kEmptyInput, "cannot sanitize an empty clip");
  const AudioClip input =
      clip.sample_rate == kAnalysisRate ? clip : Resample(clip, kAnalysisRate);
  VocoderFeatures features =
      ConvertFeatures(Analyze(input, config.analysis), ckpt, config.direction,
                      config.differential_envelope);
  AudioClip out = Synthesize(features, config.synthesis);
  out.source_path = clip.source_path;
  if (config.peak_normalize) out = PeakNormalize(std::move(out));
  if (converted) *converted = std::move(features);
  return out;
}

std::string BatchReport::status() const {
  if (failed == 0) return "ok";
  return succeeded > 0 ? "partial" : "failed";
}

BatchReport SanitizeBatch(const Corpus &corpus, const gan::Checkpoint &ckpt,
                          const SanitizeConfig &config) {
  if (corpus.empty())
    throw Error(ErrorCode::kEmptyCorpus, "nothing to sanitize");
  std::error_code ec;
  fs::create_directories(config.output_dir, ec);
  if (ec || !fs::is_directory(config.output_dir))
    throw Error(ErrorCode::kOutputDirUnwritable,
                "cannot create output directory " + config.output_dir);
  const fs::path probe = fs::path(config.output_dir) / ".voxsan-write-test";
  {
    std::ofstream test(probe);
    if (!test)
      throw Error(ErrorCode::kOutputDirUnwritable,
                  "output directory is not writable: " + config.output_dir);
  }
  fs::remove(probe, ec);

  const auto started = std::chrono::steady_clock::now();
  BatchReport report;
  report.files.resize(corpus.size());
  ParallelFor(corpus.size(), config.threads, [&](std::size_t i) {
    const auto begin = std::chrono::steady_clock::now();
    const CorpusEntry &entry = corpus.entries[i];
    FileResult &r = report.files[i];
    r.relative_path = entry.relative_path;
    r.output_path = (fs::path(config.output_dir) / entry.relative_path).string();
    try {
      VocoderFeatures features;
      const AudioClip out = SanitizeClip(ReadWav(entry.path), ckpt, config,
                                         config.dump_features ? &features : nullptr);
      fs::create_directories(fs::path(r.output_path).parent_path());
      WriteWav(out, r.output_path);
      if (config.dump_features) WriteFeatures(features, r.output_path + ".vxft");
      r.ok = true;
    } catch (const std::exception &e) {
      r.ok = false;
      r.error = e.what();
    }
    r.seconds = Seconds(begin);
  });
  for (const auto &f : report.files) (f.ok ? report.succeeded : report.failed)++;
  report.seconds = Seconds(started);
  return report;
}

std::string FormatBatchReport(const BatchReport &report) {
  std::string out = "relative_path,status,output,error\n";
  for (const auto &f : report.files) {
    std::string error = f.error;
    for (char &c : error)
      if (c == ',' || c == '\n') c = ';';
    out += f.relative_path + "," + (f.ok ? "ok" : "failed") + "," +
           (f.ok ? f.output_path : "") + "," + error + "\n";
  }
  out += "# " + std::to_string(report.succeeded) + " ok, " +
         std::to_string(report.failed) + " failed, status " + report.status() + "\n";
  return out;
}

void WriteBatchReport(const BatchReport &report, const std::string &dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::ofstream status(fs::path(dir) / "batch.csv");
  status << FormatBatchReport(report);
  std::ofstream timings(fs::path(dir) / "batch_timings.csv");
  timings << "relative_path,seconds\n";
  char line[64];
  for (const auto &f : report.files) {
    std::snprintf(line, sizeof(line), "%.3f", f.seconds);
    timings << f.relative_path << "," << line << "\n";
  }
  if (!status || !timings)
    throw Error(ErrorCode::kIoFailure, "cannot write batch report in " + dir);
}

}  // namespace voxsan
