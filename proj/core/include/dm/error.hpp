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

#ifndef DM_ERROR_HPP_
#define DM_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace dm {

enum class ErrorCode {
  kImproperInput,
  kMaskOutOfRange,
  kElementOutOfRange,
  kSizeMismatch,
  kSizeLimit,
  kParity,
  kNotDeltaMatroid,
  kDegreeViolation,
  kImproperResult,
  kStabilityViolation,
  kEmptyBases,
  kRankOutOfRange,
  kMissingLayer,
  kInvalidLayer,
  kAlphaOutOfRange,
  kInconsistentS,
  kFeasibility,
  kInvalidPartition,
  kPrecondition,
  kIncompleteCache,
  kCacheUnavailable,
  kResourceLimit,
  kParse,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type; `code()`
// identifies the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dm

#endif  // DM_ERROR_HPP_
