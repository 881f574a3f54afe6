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

#ifndef SBFE_ERROR_H_
#define SBFE_ERROR_H_

#include <stdexcept>
#include <string>

namespace sbfe {

enum class ErrorCode {
  kOk,
  kEmptyClass,
  kThresholdOutOfRange,
  kProbabilityOutOfRange,
  kLengthMismatch,
  kAlreadyCertified,
  kDuplicateTest,
  kNotElementary,
  kMalformedStrategy,
  kTooLarge,
  kOracleUnavailable,
  kParameterNotIntegral,
  kBadRange,
  kParseError,
  kInvalidArgument,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type; `code()`
// identifies the violated contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sbfe

#endif  // SBFE_ERROR_H_
