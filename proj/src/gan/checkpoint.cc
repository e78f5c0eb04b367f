// src/gan/checkpoint.cc

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

#include "voxsan/gan/checkpoint.h"

#include <cstdio>

#include "voxsan/common/binary_io.h"
#include "voxsan/common/error.h"

namespace voxsan::gan {

namespace {

constexpr int kCorrupt = static_cast<int>(ErrorCode::kCorruptCheckpoint);

void PutI32(ByteWriter &w, int v) { w.PutU32(static_cast<std::uint32_t>(v)); }
int GetI32(ByteReader &r) { return static_cast<int>(r.GetU32()); }

void PutSpec(ByteWriter &w, const ModelSpec &s) {
  const auto &g = s.generator;
  for (int v : {g.dims, g.channels, g.downsample, g.residual_blocks, g.kernel,
                g.max_channels})
    PutI32(w, v);
  w.PutU8(g.global_residual ? 1 : 0);
  w.PutF64(g.output_init_scale);
  const auto &d = s.discriminator;
  for (int v : {d.dims, d.channels, d.strided_layers, d.kernel, d.max_channels})
    PutI32(w, v);
  PutI32(w, s.segment_length);
}

ModelSpec GetSpec(ByteReader &r) {
  ModelSpec s;
  auto &g = s.generator;
  for (int *v : {&g.dims, &g.channels, &g.downsample, &g.residual_blocks,
                 &g.kernel, &g.max_channels})
    *v = GetI32(r);
  g.global_residual = r.GetU8() != 0;
  g.output_init_scale = r.GetF64();
  auto &d = s.discriminator;
  for (int *v : {&d.dims, &d.channels, &d.strided_layers, &d.kernel,
                 &d.max_channels})
    *v = GetI32(r);
  s.segment_length = GetI32(r);
  return s;
}

void PutConfig(ByteWriter &w, const TrainConfig &c) {
  w.PutF64(c.lambda_cyc);
  w.PutF64(c.lambda_id);
  PutI32(w, c.identity_epochs);
  w.PutF64(c.lr_generator);
  w.PutF64(c.lr_discriminator);
  w.PutF64(c.decay_start);
  w.PutF64(c.beta1);
  w.PutF64(c.beta2);
  PutI32(w, c.batch_size);
  PutI32(w, c.epochs);
  PutI32(w, c.max_steps);
  w.PutU64(c.seed);
  PutI32(w, c.segment_length);
  w.PutString(c.profile);
}

TrainConfig GetConfig(ByteReader &r) {
  TrainConfig c;
  c.lambda_cyc = r.GetF64();
  c.lambda_id = r.GetF64();
  c.identity_epochs = GetI32(r);
  c.lr_generator = r.GetF64();
  c.lr_discriminator = r.GetF64();
  c.decay_start = r.GetF64();
  c.beta1 = r.GetF64();
  c.beta2 = r.GetF64();
  c.batch_size = GetI32(r);
  c.epochs = GetI32(r);
  c.max_steps = GetI32(r);
  c.seed = r.GetU64();
  c.segment_length = GetI32(r);
  c.profile = r.GetString();
  return c;
}

void PutDomain(ByteWriter &w, const DomainStats &d) {
  w.PutF64(d.logf0.mean);
  w.PutF64(d.logf0.std);
  w.PutU64(d.logf0.voiced_frame_count);
  w.PutU32(static_cast<std::uint32_t>(d.norm.dims()));
  for (double v : d.norm.mean) w.PutF64(v);
  for (double v : d.norm.std) w.PutF64(v);
  for (bool b : d.norm.flagged) w.PutU8(b ? 1 : 0);
}

DomainStats GetDomain(ByteReader &r) {
  DomainStats d;
  d.logf0.mean = r.GetF64();
  d.logf0.std = r.GetF64();
  d.logf0.voiced_frame_count = r.GetU64();
  const std::size_t dims = r.GetU32();
  if (dims > r.remaining())
    throw Error(ErrorCode::kCorruptCheckpoint, "implausible stats size");
  d.norm.mean.resize(dims);
  d.norm.std.resize(dims);
  d.norm.flagged.resize(dims);
  for (double &v : d.norm.mean) v = r.GetF64();
  for (double &v : d.norm.std) v = r.GetF64();
  for (std::size_t i = 0; i < dims; ++i) d.norm.flagged[i] = r.GetU8() != 0;
  return d;
}

template <typename Net>
void PutNetwork(ByteWriter &w, const std::string &prefix, const Net &net) {
  for (const auto &slot : net.layout().slots()) {
    w.PutString(prefix + "." + slot.name);
    w.PutU32(static_cast<std::uint32_t>(slot.shape.size()));
    for (int d : slot.shape) w.PutU32(static_cast<std::uint32_t>(d));
    for (std::size_t i = 0; i < slot.size; ++i)
      w.PutF32(net.params()[slot.offset + i]);
  }
}

template <typename Net>
void GetNetwork(ByteReader &r, const std::string &prefix, Net &net) {
  for (const auto &slot : net.layout().slots()) {
    const std::string name = r.GetString();
    if (name != prefix + "." + slot.name)
      throw Error(ErrorCode::kCorruptCheckpoint,
                  "expected tensor " + prefix + "." + slot.name + ", found " +
                      name);
    const std::uint32_t rank = r.GetU32();
    if (rank != slot.shape.size())
      throw Error(ErrorCode::kCorruptCheckpoint, "rank mismatch for " + name);
    for (int d : slot.shape)
      if (r.GetU32() != static_cast<std::uint32_t>(d))
        throw Error(ErrorCode::kCorruptCheckpoint, "shape mismatch for " + name);
    for (std::size_t i = 0; i < slot.size; ++i)
      net.params()[slot.offset + i] = r.GetF32();
  }
}

std::size_t TensorCount(const CycleGan<float> &m) {
  return 2 * m.g.layout().slots().size() + 2 * m.dx.layout().slots().size();
}

}  // namespace

std::vector<std::uint8_t> EncodeCheckpoint(const Checkpoint &ckpt) {
  ByteWriter w;
  w.PutTag("VXCK");
  w.PutU32(kCheckpointVersion);
  PutSpec(w, ckpt.spec);
  PutConfig(w, ckpt.config);
  w.PutString(ckpt.domain_x);
  w.PutString(ckpt.domain_y);
  PutI32(w, ckpt.epoch);
  w.PutF64(ckpt.warp);
  PutDomain(w, ckpt.stats.source);
  PutDomain(w, ckpt.stats.target);
  w.PutU32(static_cast<std::uint32_t>(TensorCount(ckpt.model)));
  PutNetwork(w, "G", ckpt.model.g);
  PutNetwork(w, "F", ckpt.model.f);
  PutNetwork(w, "DX", ckpt.model.dx);
  PutNetwork(w, "DY", ckpt.model.dy);
  w.PutU32(static_cast<std::uint32_t>(ckpt.history.size()));
  for (const auto &h : ckpt.history) {
    PutI32(w, h.epoch);
    PutI32(w, h.step);
    for (double v : {h.losses.adversarial_g, h.losses.adversarial_d,
                     h.losses.cycle, h.losses.identity, h.losses.full})
      w.PutF64(v);
  }
  w.PutU32(Crc32(w.bytes()));
  return std::move(w.bytes());
}

Checkpoint DecodeCheckpoint(std::span<const std::uint8_t> bytes) {
  ByteReader head(bytes, kCorrupt);
  if (head.GetTag(4) != "VXCK")
    throw Error(ErrorCode::kCorruptCheckpoint, "not a checkpoint");
  const std::uint32_t version = head.GetU32();
  if (version != kCheckpointVersion)
    throw Error(ErrorCode::kVersionMismatch,
                "checkpoint version " + std::to_string(version) +
                    ", expected " + std::to_string(kCheckpointVersion));
  if (bytes.size() < 12)
    throw Error(ErrorCode::kCorruptCheckpoint, "checkpoint truncated");
  auto body = bytes.first(bytes.size() - 4);
  ByteReader tail(bytes.last(4), kCorrupt);
  if (Crc32(body) != tail.GetU32())
    throw Error(ErrorCode::kCorruptCheckpoint, "checksum mismatch");

  ByteReader r(body, kCorrupt);
  r.GetTag(4);
  r.GetU32();
  Checkpoint ckpt;
  ckpt.spec = GetSpec(r);
  ckpt.config = GetConfig(r);
  ckpt.domain_x = r.GetString();
  ckpt.domain_y = r.GetString();
  ckpt.epoch = GetI32(r);
  ckpt.warp = r.GetF64();
  ckpt.stats.source = GetDomain(r);
  ckpt.stats.target = GetDomain(r);
  try {
    ckpt.model = CycleGan<float>(ckpt.spec);
  } catch (const Error &e) {
    throw Error(ErrorCode::kCorruptCheckpoint, e.what());
  }
  if (r.GetU32() != TensorCount(ckpt.model))
    throw Error(ErrorCode::kCorruptCheckpoint, "tensor count mismatch");
  GetNetwork(r, "G", ckpt.model.g);
  GetNetwork(r, "F", ckpt.model.f);
  GetNetwork(r, "DX", ckpt.model.dx);
  GetNetwork(r, "DY", ckpt.model.dy);
  const std::uint32_t count = r.GetU32();
  if (count > r.remaining() / 48)
    throw Error(ErrorCode::kCorruptCheckpoint, "implausible history length");
  ckpt.history.resize(count);
  for (auto &h : ckpt.history) {
    h.epoch = GetI32(r);
    h.step = GetI32(r);
    for (double *v : {&h.losses.adversarial_g, &h.losses.adversarial_d,
                      &h.losses.cycle, &h.losses.identity, &h.losses.full})
      *v = r.GetF64();
  }
  if (r.remaining() != 0)
    throw Error(ErrorCode::kCorruptCheckpoint, "trailing bytes in checkpoint");
  return ckpt;
}

void SaveCheckpoint(const Checkpoint &ckpt, const std::string &path) {
  WriteFileBytes(path, EncodeCheckpoint(ckpt));
}

Checkpoint LoadCheckpoint(const std::string &path) {
  return DecodeCheckpoint(ReadFileBytes(path));
}

std::string LossHistoryCsv(const std::vector<StepRecord> &history) {
  std::string out = "step,epoch,adversarial_g,adversarial_d,cycle,identity,full\n";
  char line[256];
  for (const auto &h : history) {
    std::snprintf(line, sizeof(line), "%d,%d,%.9g,%.9g,%.9g,%.9g,%.9g\n",
                  h.step, h.epoch, h.losses.adversarial_g,
                  h.losses.adversarial_d, h.losses.cycle, h.losses.identity,
                  h.losses.full);
    out += line;
  }
  return out;
}

}  // namespace voxsan::gan
