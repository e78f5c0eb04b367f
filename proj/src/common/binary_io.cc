// src/common/binary_io.cc

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

#include "voxsan/common/binary_io.h"

#include <zlib.h>

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

#include "voxsan/common/error.h"

namespace voxsan {

void ByteWriter::PutU16(std::uint16_t v) {
  PutU8(static_cast<std::uint8_t>(v));
  PutU8(static_cast<std::uint8_t>(v >> 8));
}

void ByteWriter::PutU32(std::uint32_t v) {
  for (int i = 0; i < 4; ++i) PutU8(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::PutU64(std::uint64_t v) {
  for (int i = 0; i < 8; ++i) PutU8(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::PutF32(float v) { PutU32(std::bit_cast<std::uint32_t>(v)); }

void ByteWriter::PutF64(double v) { PutU64(std::bit_cast<std::uint64_t>(v)); }

void ByteWriter::PutBytes(std::span<const std::uint8_t> data) {
  bytes_.insert(bytes_.end(), data.begin(), data.end());
}

void ByteWriter::PutTag(std::string_view tag) {
  for (char c : tag) PutU8(static_cast<std::uint8_t>(c));
}

void ByteWriter::PutString(std::string_view s) {
  PutU32(static_cast<std::uint32_t>(s.size()));
  PutTag(s);
}

ByteReader::ByteReader(std::span<const std::uint8_t> data, int error_code)
    : data_(data), error_code_(error_code) {}

void ByteReader::Need(std::size_t n) const {
  if (n > remaining())
    throw Error(static_cast<ErrorCode>(error_code_),
                "unexpected end of data at byte " + std::to_string(pos_));
}

std::uint8_t ByteReader::GetU8() {
  Need(1);
  return data_[pos_++];
}

std::uint16_t ByteReader::GetU16() {
  Need(2);
  std::uint16_t v = static_cast<std::uint16_t>(data_[pos_] |
                                               (data_[pos_ + 1] << 8));
  pos_ += 2;
  return v;
}

std::uint32_t ByteReader::GetU32() {
  Need(4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i)
    v |= static_cast<std::uint32_t>(data_[pos_ + i]) << (8 * i);
  pos_ += 4;
  return v;
}

std::uint64_t ByteReader::GetU64() {
  Need(8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i)
    v |= static_cast<std::uint64_t>(data_[pos_ + i]) << (8 * i);
  pos_ += 8;
  return v;
}

float ByteReader::GetF32() { return std::bit_cast<float>(GetU32()); }

double ByteReader::GetF64() { return std::bit_cast<double>(GetU64()); }

std::string ByteReader::GetTag(std::size_t length) {
  auto bytes = GetBytes(length);
  return std::string(bytes.begin(), bytes.end());
}

std::string ByteReader::GetString() {
  std::uint32_t length = GetU32();
  return GetTag(length);
}

std::span<const std::uint8_t> ByteReader::GetBytes(std::size_t length) {
  Need(length);
  auto out = data_.subspan(pos_, length);
  pos_ += length;
  return out;
}

std::vector<std::uint8_t> ReadFileBytes(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kIoFailure, "read failed: " + path);
  return bytes;
}

void WriteFileBytes(const std::string &path,
                    std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoFailure, "cannot create " + path);
  out.write(reinterpret_cast<const char *>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIoFailure, "write failed: " + path);
}

std::uint32_t Crc32(std::span<const std::uint8_t> bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed in chunks for very large buffers.
  std::size_t offset = 0;
  while (offset < bytes.size()) {
    std::size_t chunk = std::min<std::size_t>(bytes.size() - offset, 1u << 30);
    crc = crc32(crc, bytes.data() + offset, static_cast<uInt>(chunk));
    offset += chunk;
  }
  return static_cast<std::uint32_t>(crc);
}

}  // namespace voxsan
