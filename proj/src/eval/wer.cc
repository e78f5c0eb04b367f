// src/eval/wer.cc

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

#include "voxsan/eval/wer.h"

#include <algorithm>
#include <cctype>

#include "voxsan/common/error.h"

namespace voxsan {

std::vector<std::string> NormalizeWords(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isspace(u)) {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else if (!std::ispunct(u)) {
      current.push_back(static_cast<char>(std::tolower(u)));
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

std::vector<std::string> NormalizeWords(const std::vector<std::string> &words) {
  std::string joined;
  for (const auto &w : words) {
    joined += w;
    joined += ' ';
  }
  return NormalizeWords(joined);
}

EditCounts AlignWords(const std::vector<std::string> &reference,
                      const std::vector<std::string> &hypothesis) {
  const std::size_t n = reference.size(), m = hypothesis.size();
  struct Cell {
    int cost = 0, sub = 0, ins = 0, del = 0;
  };
  std::vector<Cell> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j)
    prev[j] = {static_cast<int>(j), 0, static_cast<int>(j), 0};
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = {static_cast<int>(i), 0, 0, static_cast<int>(i)};
    for (std::size_t j = 1; j <= m; ++j) {
      Cell diag = prev[j - 1];
      if (reference[i - 1] != hypothesis[j - 1]) {
        ++diag.cost;
        ++diag.sub;
      }
      Cell del = prev[j];
      ++del.cost;
      ++del.del;
      Cell ins = cur[j - 1];
      ++ins.cost;
      ++ins.ins;
      Cell best = diag;
      if (del.cost < best.cost) best = del;
      if (ins.cost < best.cost) best = ins;
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  const Cell &end = prev[m];
  return {end.sub, end.ins, end.del, static_cast<int>(n)};
}

double WordErrorRate(const std::vector<std::string> &reference,
                     const std::vector<std::string> &hypothesis) {
  const auto ref = NormalizeWords(reference);
  if (ref.empty())
    throw Error(ErrorCode::kEmptyReference, "WER needs a non-empty reference");
  const auto counts = AlignWords(ref, NormalizeWords(hypothesis));
  return static_cast<double>(counts.errors()) /
         static_cast<double>(counts.reference_words);
}

double WordErrorRate(std::string_view reference, std::string_view hypothesis) {
  return WordErrorRate(NormalizeWords(reference), NormalizeWords(hypothesis));
}

}  // namespace voxsan
