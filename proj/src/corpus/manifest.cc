// src/corpus/manifest.cc

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

#include "voxsan/corpus/manifest.h"

#include <boost/tokenizer.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "voxsan/common/error.h"

namespace voxsan {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> SplitCsvLine(const std::string &line) {
  using Separator = boost::escaped_list_separator<char>;
  boost::tokenizer<Separator> tokens(line, Separator('\\', ',', '"'));
  std::vector<std::string> fields;
  for (const auto &t : tokens) fields.push_back(t);
  return fields;
}

std::string Trim(std::string s) {
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::string Quote(const std::string &field) {
  if (field.find_first_of(",\"\\") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string JoinWords(const std::vector<std::string> &words) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i) out.push_back(' ');
    out += words[i];
  }
  return out;
}

}  // namespace

Corpus LoadManifest(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open manifest " + path);
  const fs::path base = fs::absolute(fs::path(path)).parent_path();

  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!Trim(line).empty()) {
      header = SplitCsvLine(line);
      break;
    }
  }
  std::map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < header.size(); ++i)
    column[Trim(header[i])] = i;
  for (const char *required : {"path", "speaker", "emotion", "transcript"})
    if (!column.count(required))
      throw Error(ErrorCode::kMissingColumn,
                  std::string("manifest ") + path + " lacks column '" +
                      required + "'");
  std::optional<std::size_t> intensity_column;
  if (column.count("intensity")) intensity_column = column["intensity"];

  Corpus corpus;
  corpus.root_dir = base.string();
  std::set<std::string> seen;
  int line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) continue;
    std::vector<std::string> fields = SplitCsvLine(line);
    auto field = [&](const std::string &name) -> std::string {
      std::size_t idx = column.at(name);
      if (idx >= fields.size())
        throw Error(ErrorCode::kMissingColumn,
                    path + ":" + std::to_string(line_number) +
                        " has no value for '" + name + "'");
      return Trim(fields[idx]);
    };

    CorpusEntry entry;
    std::string raw_path = field("path");
    fs::path p(raw_path);
    fs::path resolved = p.is_absolute() ? p : base / p;
    resolved = resolved.lexically_normal();
    if (!fs::is_regular_file(resolved))
      throw Error(ErrorCode::kMissingFile,
                  path + ":" + std::to_string(line_number) + " references " +
                      resolved.string());
    entry.path = resolved.string();
    fs::path rel = resolved.lexically_relative(base);
    entry.relative_path = (rel.empty() || *rel.begin() == "..")
                              ? resolved.filename().string()
                              : rel.string();
    if (!seen.insert(entry.path).second)
      throw Error(ErrorCode::kDuplicatePath,
                  path + ":" + std::to_string(line_number) + " repeats " +
                      entry.path);

    std::string emotion_text = field("emotion");
    auto emotion = ParseEmotion(emotion_text);
    if (!emotion)
      throw Error(ErrorCode::kUnknownEmotionLabel,
                  path + ":" + std::to_string(line_number) + " label '" +
                      emotion_text + "'");
    entry.labels.emotion = *emotion;
    entry.labels.speaker_id = field("speaker");
    std::string transcript = field("transcript");
    if (!transcript.empty()) entry.labels.transcript = SplitWords(transcript);
    if (intensity_column && *intensity_column < fields.size()) {
      std::string intensity = Trim(fields[*intensity_column]);
      if (!intensity.empty()) entry.labels.intensity = intensity;
    }
    corpus.entries.push_back(std::move(entry));
  }
  return corpus;
}

void WriteManifest(const Corpus &corpus, const std::string &path) {
  const fs::path base = fs::absolute(fs::path(path)).parent_path();
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoFailure, "cannot create " + path);
  out << "path,speaker,emotion,transcript,intensity\n";
  for (const auto &e : corpus.entries) {
    fs::path p = fs::absolute(e.path).lexically_normal();
    fs::path rel = p.lexically_relative(base);
    std::string shown =
        (rel.empty() || *rel.begin() == "..") ? p.string() : rel.string();
    out << Quote(shown) << ',' << Quote(e.labels.speaker_id) << ','
        << EmotionName(e.labels.emotion) << ','
        << Quote(e.labels.transcript ? JoinWords(*e.labels.transcript) : "")
        << ',' << Quote(e.labels.intensity.value_or("")) << '\n';
  }
  if (!out) throw Error(ErrorCode::kIoFailure, "write failed: " + path);
}

}  // namespace voxsan
