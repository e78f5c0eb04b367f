// src/eval/speaker.cc

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

#include "voxsan/eval/speaker.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <utility>

#include "voxsan/common/error.h"

namespace voxsan {

SpeakerEmbedding RawSpeakerEmbedding(const F0Track &f0, const McepTrack &mcep,
                                     const std::string &speaker_id) {
  SpeakerEmbedding e;
  e.speaker_id = speaker_id;
  const int order = mcep.order();
  e.values.assign(static_cast<std::size_t>(std::max(order, 0)) + 2, 0.0);
  if (mcep.frames() > 0) {
    for (int d = 1; d <= order; ++d) {
      double sum = 0.0;
      for (std::size_t t = 0; t < mcep.frames(); ++t) sum += mcep.values(t, d);
      e.values[d - 1] = sum / static_cast<double>(mcep.frames());
    }
  }
  double sum = 0.0, sq = 0.0;
  std::size_t voiced = 0;
  for (double v : f0.values) {
    if (v <= 0.0) continue;
    const double l = std::log(v);
    sum += l;
    sq += l * l;
    ++voiced;
  }
  if (voiced > 0) {
    const double mean = sum / static_cast<double>(voiced);
    e.values[order] = mean;
    e.values[order + 1] =
        std::sqrt(std::max(0.0, sq / static_cast<double>(voiced) - mean * mean));
  }
  return e;
}

void NormalizeEmbeddings(std::vector<SpeakerEmbedding> &embeddings) {
  if (embeddings.empty()) return;
  const std::size_t dims = embeddings.front().values.size();
  for (const auto &e : embeddings)
    if (e.values.size() != dims)
      throw Error(ErrorCode::kShapeMismatch, "embedding lengths differ");
  const double n = static_cast<double>(embeddings.size());
  for (std::size_t d = 0; d < dims; ++d) {
    double sum = 0.0;
    for (const auto &e : embeddings) sum += e.values[d];
    const double mean = sum / n;
    double sq = 0.0;
    for (const auto &e : embeddings)
      sq += (e.values[d] - mean) * (e.values[d] - mean);
    const double sd = std::sqrt(sq / n);
    for (auto &e : embeddings)
      e.values[d] = sd > 1e-12 ? (e.values[d] - mean) / sd : e.values[d] - mean;
  }
  for (auto &e : embeddings) {
    double norm = 0.0;
    for (double v : e.values) norm += v * v;
    norm = std::sqrt(norm);
    if (norm > 0.0)
      for (double &v : e.values) v /= norm;
  }
}

double CosineSimilarity(const std::vector<double> &a,
                        const std::vector<double> &b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::kShapeMismatch, "embedding lengths differ");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / std::sqrt(na * nb);
}

VerificationTrials SpeakerScores(const std::vector<SpeakerEmbedding> &embeddings,
                                 std::uint64_t seed) {
  std::map<std::string, int> clips;
  for (const auto &e : embeddings) ++clips[e.speaker_id];
  int usable = 0;
  for (const auto &[id, count] : clips)
    if (count >= 2) ++usable;
  if (clips.size() < 2 || usable < 2)
    throw Error(ErrorCode::kInsufficientSpeakers,
                "verification needs two speakers with two clips each");

  VerificationTrials trials;
  std::vector<std::pair<std::size_t, std::size_t>> cross;
  for (std::size_t i = 0; i < embeddings.size(); ++i) {
    for (std::size_t j = i + 1; j < embeddings.size(); ++j) {
      if (embeddings[i].speaker_id == embeddings[j].speaker_id)
        trials.genuine.push_back(
            CosineSimilarity(embeddings[i].values, embeddings[j].values));
      else
        cross.emplace_back(i, j);
    }
  }
  const std::size_t take = std::min(cross.size(), trials.genuine.size());
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < take; ++k) {
    std::swap(cross[k], cross[k + rng() % (cross.size() - k)]);
    trials.impostor.push_back(CosineSimilarity(embeddings[cross[k].first].values,
                                               embeddings[cross[k].second].values));
  }
  return trials;
}

}  // namespace voxsan
