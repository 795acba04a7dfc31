// Copyright 2026 The Semfields Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semfields {

enum class ErrorCode {
  kMalformedSource,
  kManifestMismatch,
  kUnpinnedSource,
  kBadIndexFile,
  kEmptyInput,
  kBadPartition,
  kSingleClassData,
  kEmptyData,
  kNonConvergence,
  kDimensionMismatch,
  kLengthMismatch,
  kBadModelFile,
  kNoSemanticContent,
  kWordAbsent,
  kParseError,
  kDuplicateId,
  kEmptyText,
  kMissingGold,
  kIoError,
  kInvalidArgument,
};

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedSource: return "MalformedSource";
    case ErrorCode::kManifestMismatch: return "ManifestMismatch";
    case ErrorCode::kUnpinnedSource: return "UnpinnedSource";
    case ErrorCode::kBadIndexFile: return "BadIndexFile";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kBadPartition: return "BadPartition";
    case ErrorCode::kSingleClassData: return "SingleClassData";
    case ErrorCode::kEmptyData: return "EmptyData";
    case ErrorCode::kNonConvergence: return "NonConvergence";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kBadModelFile: return "BadModelFile";
    case ErrorCode::kNoSemanticContent: return "NoSemanticContent";
    case ErrorCode::kWordAbsent: return "WordAbsent";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kEmptyText: return "EmptyText";
    case ErrorCode::kMissingGold: return "MissingGold";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// All domain failures surface as this exception; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Row-addressed failure raised while reading line-oriented inputs.
class RowError : public Error {
 public:
  RowError(ErrorCode code, std::size_t row, const std::string& message)
      : Error(code, "row " + std::to_string(row) + ": " + message), row_(row) {}

  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

}  // namespace semfields
