// include/voxsan/common/error.h

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

#ifndef VOXSAN_COMMON_ERROR_H_
#define VOXSAN_COMMON_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace voxsan {

// Every failure the toolkit reports carries one of these codes; callers
// branch on code() rather than on message text.
enum class ErrorCode {
  kInvalidArgument,
  kIoFailure,
  kUnsupportedFormat,
  kCorruptHeader,
  kMissingColumn,
  kUnknownEmotionLabel,
  kMissingFile,
  kDuplicatePath,
  kSchemeMismatch,
  kUnknownCode,
  kClipTooShort,
  kInconsistentFrames,
  kNonPositiveEnvelope,
  kNoVoicedFrames,
  kEmptyInput,
  kShapeMismatch,
  kNonFiniteLoss,
  kEmptyCorpus,
  kVersionMismatch,
  kCorruptCheckpoint,
  kChecksumMismatch,
  kOutputDirUnwritable,
  kInsufficientData,
  kOrderMismatch,
  kInsufficientSpeakers,
  kEmptyScores,
  kEmptyReference,
  kProviderUnavailable,
  kProviderTimeout,
  kCorpusMismatch,
  kProtocolViolation,
  kBadConfig,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message);

  ErrorCode code() const { return code_; }
  // The message without the code prefix that what() carries.
  const std::string &message() const { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace voxsan

#endif  // VOXSAN_COMMON_ERROR_H_
