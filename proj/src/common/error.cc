// src/common/error.cc

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

#include "voxsan/common/error.h"

namespace voxsan {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoFailure: return "IoFailure";
    case ErrorCode::kUnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::kCorruptHeader: return "CorruptHeader";
    case ErrorCode::kMissingColumn: return "MissingColumn";
    case ErrorCode::kUnknownEmotionLabel: return "UnknownEmotionLabel";
    case ErrorCode::kMissingFile: return "MissingFile";
    case ErrorCode::kDuplicatePath: return "DuplicatePath";
    case ErrorCode::kSchemeMismatch: return "SchemeMismatch";
    case ErrorCode::kUnknownCode: return "UnknownCode";
    case ErrorCode::kClipTooShort: return "ClipTooShort";
    case ErrorCode::kInconsistentFrames: return "InconsistentFrames";
    case ErrorCode::kNonPositiveEnvelope: return "NonPositiveEnvelope";
    case ErrorCode::kNoVoicedFrames: return "NoVoicedFrames";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kNonFiniteLoss: return "NonFiniteLoss";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kVersionMismatch: return "VersionMismatch";
    case ErrorCode::kCorruptCheckpoint: return "CorruptCheckpoint";
    case ErrorCode::kChecksumMismatch: return "ChecksumMismatch";
    case ErrorCode::kOutputDirUnwritable: return "OutputDirUnwritable";
    case ErrorCode::kInsufficientData: return "InsufficientData";
    case ErrorCode::kOrderMismatch: return "OrderMismatch";
    case ErrorCode::kInsufficientSpeakers: return "InsufficientSpeakers";
    case ErrorCode::kEmptyScores: return "EmptyScores";
    case ErrorCode::kEmptyReference: return "EmptyReference";
    case ErrorCode::kProviderUnavailable: return "ProviderUnavailable";
    case ErrorCode::kProviderTimeout: return "ProviderTimeout";
    case ErrorCode::kCorpusMismatch: return "CorpusMismatch";
    case ErrorCode::kProtocolViolation: return "ProtocolViolation";
    case ErrorCode::kBadConfig: return "BadConfig";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      message_(message) {}

}  // namespace voxsan
