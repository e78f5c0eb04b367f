// include/voxsan/corpus/manifest.h

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

#ifndef VOXSAN_CORPUS_MANIFEST_H_
#define VOXSAN_CORPUS_MANIFEST_H_

#include <string>
#include <vector>

#include "voxsan/corpus/labels.h"

namespace voxsan {

struct CorpusEntry {
  std::string path;           // resolved, readable path
  std::string relative_path;  // path relative to Corpus::root_dir
  ClipLabels labels;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
  std::string root_dir;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
};

// Manifest: comma-separated UTF-8 text, header row naming at least
// path,speaker,emotion,transcript (intensity optional, any column order).
// Fields may be double-quoted. Relative paths resolve against the manifest's
// directory. Throws kMissingColumn, kUnknownEmotionLabel, kMissingFile,
// kDuplicatePath or kIoFailure.
Corpus LoadManifest(const std::string &path);

// Writes paths relative to the manifest's own directory when possible.
void WriteManifest(const Corpus &corpus, const std::string &path);

}  // namespace voxsan

#endif  // VOXSAN_CORPUS_MANIFEST_H_
