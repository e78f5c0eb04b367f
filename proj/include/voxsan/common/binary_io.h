// include/voxsan/common/binary_io.h

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

#ifndef VOXSAN_COMMON_BINARY_IO_H_
#define VOXSAN_COMMON_BINARY_IO_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace voxsan {

// Little-endian byte sink used by the feature-dump and checkpoint writers.
class ByteWriter {
 public:
  void PutU8(std::uint8_t v) { bytes_.push_back(v); }
  void PutU16(std::uint16_t v);
  void PutU32(std::uint32_t v);
  void PutU64(std::uint64_t v);
  void PutI16(std::int16_t v) { PutU16(static_cast<std::uint16_t>(v)); }
  void PutF32(float v);
  void PutF64(double v);
  void PutBytes(std::span<const std::uint8_t> data);
  void PutTag(std::string_view tag);  // raw bytes, no length prefix
  void PutString(std::string_view s);  // u32 length + bytes

  const std::vector<std::uint8_t> &bytes() const { return bytes_; }
  std::vector<std::uint8_t> &bytes() { return bytes_; }

 private:
  std::vector<std::uint8_t> bytes_;
};

// Bounds-checked little-endian reader. Running off the end throws
// Error(error_code) so each container format reports its own code.
class ByteReader {
 public:
  ByteReader(std::span<const std::uint8_t> data, int error_code);

  std::uint8_t GetU8();
  std::uint16_t GetU16();
  std::uint32_t GetU32();
  std::uint64_t GetU64();
  std::int16_t GetI16() { return static_cast<std::int16_t>(GetU16()); }
  float GetF32();
  double GetF64();
  std::string GetTag(std::size_t length);
  std::string GetString();
  std::span<const std::uint8_t> GetBytes(std::size_t length);

  std::size_t position() const { return pos_; }
  std::size_t remaining() const { return data_.size() - pos_; }

 private:
  void Need(std::size_t n) const;

  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
  int error_code_;
};

std::vector<std::uint8_t> ReadFileBytes(const std::string &path);
void WriteFileBytes(const std::string &path,
                    std::span<const std::uint8_t> bytes);

std::uint32_t Crc32(std::span<const std::uint8_t> bytes);

}  // namespace voxsan

#endif  // VOXSAN_COMMON_BINARY_IO_H_
