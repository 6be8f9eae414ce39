// Copyright 2026 The prefsplit Authors
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

#ifndef PREFSPLIT_ERROR_H_
#define PREFSPLIT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace prefsplit {

enum class ErrorCode {
  kMalformedLine,
  kDuplicateCandidate,
  kNotAPermutation,
  kUnknownCandidate,
  kEmptyCandidateSet,
  kBadTriple,
  kBadIndex,
  kNotGroupSeparable,
  kLabelMismatch,
  kPreconditionViolated,
  kBadParams,
  kBadK,
  kSizeMismatch,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type; `code()`
// identifies the failure class for callers that need to branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kDuplicateCandidate: return "DuplicateCandidate";
    case ErrorCode::kNotAPermutation: return "NotAPermutation";
    case ErrorCode::kUnknownCandidate: return "UnknownCandidate";
    case ErrorCode::kEmptyCandidateSet: return "EmptyCandidateSet";
    case ErrorCode::kBadTriple: return "BadTriple";
    case ErrorCode::kBadIndex: return "BadIndex";
    case ErrorCode::kNotGroupSeparable: return "NotGroupSeparable";
    case ErrorCode::kLabelMismatch: return "LabelMismatch";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kBadK: return "BadK";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
  }
  return "Unknown";
}

}  // namespace prefsplit

#endif  // PREFSPLIT_ERROR_H_
