// src/corpus/labels.cc

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

#include "voxsan/corpus/labels.h"

#include <algorithm>
#include <cctype>
#include <filesystem>

#include "voxsan/common/error.h"

namespace voxsan {

namespace {

constexpr std::array<std::string_view, kNumEmotions> kEmotionNames = {
    "neutral", "calm", "happy", "sad", "angry", "fearful", "disgust",
    "surprised"};

std::vector<std::string> Split(std::string_view text, char delimiter) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(delimiter, start);
    if (pos == std::string_view::npos) {
      fields.emplace_back(text.substr(start));
      break;
    }
    fields.emplace_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

}  // namespace

std::string_view EmotionName(Emotion e) {
  return kEmotionNames[static_cast<int>(e)];
}

std::optional<Emotion> ParseEmotion(std::string_view text) {
  std::string lowered;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      lowered.push_back(static_cast<char>(std::tolower(
          static_cast<unsigned char>(c))));
  for (int i = 0; i < kNumEmotions; ++i)
    if (lowered == kEmotionNames[i]) return static_cast<Emotion>(i);
  if (lowered.size() == 1 && lowered[0] >= '0' && lowered[0] <= '7')
    return static_cast<Emotion>(lowered[0] - '0');
  return std::nullopt;
}

ClipLabels ParseDatasetFilename(std::string_view filename,
                                const FieldScheme &scheme) {
  std::string stem = std::filesystem::path(filename).stem().string();
  std::vector<std::string> fields = Split(stem, scheme.delimiter);
  int needed = std::max(scheme.emotion_field, scheme.speaker_field) + 1;
  if (scheme.intensity_field) needed = std::max(needed, *scheme.intensity_field + 1);
  int count = static_cast<int>(fields.size());
  if ((scheme.field_count > 0 && count != scheme.field_count) ||
      count < needed) {
    throw Error(ErrorCode::kSchemeMismatch,
                "'" + std::string(filename) + "' has " +
                    std::to_string(count) + " fields, scheme expects " +
                    std::to_string(std::max(scheme.field_count, needed)));
  }
  const std::string &code = fields[scheme.emotion_field];
  auto it = scheme.emotion_codes.find(code);
  if (it == scheme.emotion_codes.end())
    throw Error(ErrorCode::kUnknownCode,
                "emotion code '" + code + "' in '" + std::string(filename) +
                    "' is not mapped");
  ClipLabels labels;
  labels.emotion = it->second;
  labels.speaker_id = fields[scheme.speaker_field];
  if (scheme.intensity_field) labels.intensity = fields[*scheme.intensity_field];
  return labels;
}

std::vector<std::string> SplitWords(std::string_view text) {
  std::vector<std::string> words;
  std::string current;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) words.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

}  // namespace voxsan
