// src/features/stats_io.cc

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

#include "voxsan/features/stats_io.h"

#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include "voxsan/common/error.h"

namespace voxsan {

namespace {

template <typename T>
std::string Join(const std::vector<T> &values) {
  std::ostringstream out;
  out << std::setprecision(17);
  for (std::size_t i = 0; i < values.size(); ++i)
    out << (i ? " " : "") << values[i];
  return out.str();
}

void WriteDomain(std::ostream &out, const std::string &name,
                 const DomainStats &d) {
  out << name << ".logf0.mean = " << d.logf0.mean << '\n'
      << name << ".logf0.std = " << d.logf0.std << '\n'
      << name << ".logf0.voiced_frames = " << d.logf0.voiced_frame_count << '\n'
      << name << ".norm.dims = " << d.norm.dims() << '\n'
      << name << ".norm.mean = " << Join(d.norm.mean) << '\n'
      << name << ".norm.std = " << Join(d.norm.std) << '\n'
      << name << ".norm.flagged = "
      << Join(std::vector<int>(d.norm.flagged.begin(), d.norm.flagged.end()))
      << '\n';
}

class KeyValues {
 public:
  explicit KeyValues(std::map<std::string, std::string> entries)
      : entries_(std::move(entries)) {}

  const std::string &Get(const std::string &key) const {
    auto it = entries_.find(key);
    if (it == entries_.end())
      throw Error(ErrorCode::kBadConfig, "stats file lacks key " + key);
    return it->second;
  }

  template <typename T>
  T Scalar(const std::string &key) const {
    std::istringstream in(Get(key));
    T value{};
    if (!(in >> value))
      throw Error(ErrorCode::kBadConfig, "bad value for " + key);
    return value;
  }

  template <typename T>
  std::vector<T> List(const std::string &key, std::size_t expected) const {
    std::istringstream in(Get(key));
    std::vector<T> values;
    T value{};
    while (in >> value) values.push_back(value);
    if (values.size() != expected || !in.eof())
      throw Error(ErrorCode::kBadConfig, "bad list for " + key);
    return values;
  }

 private:
  std::map<std::string, std::string> entries_;
};

DomainStats ReadDomain(const KeyValues &kv, const std::string &name) {
  DomainStats d;
  d.logf0.mean = kv.Scalar<double>(name + ".logf0.mean");
  d.logf0.std = kv.Scalar<double>(name + ".logf0.std");
  d.logf0.voiced_frame_count =
      kv.Scalar<std::size_t>(name + ".logf0.voiced_frames");
  const auto dims = kv.Scalar<std::size_t>(name + ".norm.dims");
  d.norm.mean = kv.List<double>(name + ".norm.mean", dims);
  d.norm.std = kv.List<double>(name + ".norm.std", dims);
  auto flagged = kv.List<int>(name + ".norm.flagged", dims);
  d.norm.flagged.assign(flagged.begin(), flagged.end());
  return d;
}

}  // namespace

std::string FormatStats(const ConversionStats &stats) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "voxsan-stats " << kStatsFileVersion << '\n';
  WriteDomain(out, "source", stats.source);
  WriteDomain(out, "target", stats.target);
  return out.str();
}

ConversionStats ParseStats(const std::string &text) {
  std::istringstream in(text);
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != "voxsan-stats")
    throw Error(ErrorCode::kCorruptHeader, "not a voxsan stats file");
  if (version != kStatsFileVersion)
    throw Error(ErrorCode::kVersionMismatch,
                "stats file version " + std::to_string(version));
  std::map<std::string, std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::kBadConfig, "malformed line: " + line);
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    entries[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  KeyValues kv(std::move(entries));
  return {ReadDomain(kv, "source"), ReadDomain(kv, "target")};
}

void WriteStats(const ConversionStats &stats, const std::string &path) {
  std::ofstream out(path);
  out << FormatStats(stats);
  if (!out) throw Error(ErrorCode::kIoFailure, "cannot write " + path);
}

ConversionStats ReadStats(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseStats(buffer.str());
}

}  // namespace voxsan
