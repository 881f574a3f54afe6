// Copyright 2026 The Authors.
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

#include "sbfe/error.h"

namespace sbfe {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOk:
      return "Ok";
    case ErrorCode::kEmptyClass:
      return "EmptyClass";
    case ErrorCode::kThresholdOutOfRange:
      return "ThresholdOutOfRange";
    case ErrorCode::kProbabilityOutOfRange:
      return "ProbabilityOutOfRange";
    case ErrorCode::kLengthMismatch:
      return "LengthMismatch";
    case ErrorCode::kAlreadyCertified:
      return "AlreadyCertified";
    case ErrorCode::kDuplicateTest:
      return "DuplicateTest";
    case ErrorCode::kNotElementary:
      return "NotElementary";
    case ErrorCode::kMalformedStrategy:
      return "MalformedStrategy";
    case ErrorCode::kTooLarge:
      return "TooLarge";
    case ErrorCode::kOracleUnavailable:
      return "OracleUnavailable";
    case ErrorCode::kParameterNotIntegral:
      return "ParameterNotIntegral";
    case ErrorCode::kBadRange:
      return "BadRange";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace sbfe
