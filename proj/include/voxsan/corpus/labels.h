// include/voxsan/corpus/labels.h

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

#ifndef VOXSAN_CORPUS_LABELS_H_
#define VOXSAN_CORPUS_LABELS_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace voxsan {

// Closed emotion label set; the numeric values are the class indices used
// by the classifier and by numeric manifest codes.
enum class Emotion {
  kNeutral = 0,
  kCalm = 1,
  kHappy = 2,
  kSad = 3,
  kAngry = 4,
  kFearful = 5,
  kDisgust = 6,
  kSurprised = 7,
};

inline constexpr int kNumEmotions = 8;

std::string_view EmotionName(Emotion e);

// Accepts a class name ("angry", case-insensitive) or its index ("4").
std::optional<Emotion> ParseEmotion(std::string_view text);

struct ClipLabels {
  std::string speaker_id;
  Emotion emotion = Emotion::kNeutral;
  std::optional<std::vector<std::string>> transcript;
  std::optional<std::string> intensity;
};

// Describes how labels are encoded in a delimiter-separated file name, e.g.
// "03-01-05-01-02-01-12.wav" with emotion at field 2 and speaker at field 6.
struct FieldScheme {
  char delimiter = '-';
  int field_count = 0;  // 0 accepts any count large enough for the indices
  int emotion_field = 0;
  int speaker_field = 0;
  std::optional<int> intensity_field;
  std::map<std::string, Emotion> emotion_codes;
};

// Extension is stripped before splitting. Throws kSchemeMismatch or
// kUnknownCode.
ClipLabels ParseDatasetFilename(std::string_view filename,
                                const FieldScheme &scheme);

std::vector<std::string> SplitWords(std::string_view text);

}  // namespace voxsan

#endif  // VOXSAN_CORPUS_LABELS_H_
