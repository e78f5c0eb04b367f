// include/voxsan/eval/wer.h

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

#ifndef VOXSAN_EVAL_WER_H_
#define VOXSAN_EVAL_WER_H_

#include <string>
#include <string_view>
#include <vector>

namespace voxsan {

struct EditCounts {
  int substitutions = 0;
  int insertions = 0;
  int deletions = 0;
  int reference_words = 0;
  int errors() const { return substitutions + insertions + deletions; }
};

// Lowercases, drops punctuation and splits on whitespace.
std::vector<std::string> NormalizeWords(std::string_view text);
std::vector<std::string> NormalizeWords(const std::vector<std::string> &words);

// Minimal unit-cost alignment of normalized word sequences. Ties prefer
// substitution, then deletion.
EditCounts AlignWords(const std::vector<std::string> &reference,
                      const std::vector<std::string> &hypothesis);

// errors / reference length after normalization. Throws kEmptyReference.
double WordErrorRate(const std::vector<std::string> &reference,
                     const std::vector<std::string> &hypothesis);
double WordErrorRate(std::string_view reference, std::string_view hypothesis);

}  // namespace voxsan

#endif  // VOXSAN_EVAL_WER_H_
