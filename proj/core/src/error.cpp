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

#include "dm/error.hpp"

namespace dm {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kImproperInput: return "improper-input";
    case ErrorCode::kMaskOutOfRange: return "mask-out-of-range";
    case ErrorCode::kElementOutOfRange: return "element-out-of-range";
    case ErrorCode::kSizeMismatch: return "size-mismatch";
    case ErrorCode::kSizeLimit: return "size-limit";
    case ErrorCode::kParity: return "parity";
    case ErrorCode::kNotDeltaMatroid: return "not-delta-matroid";
    case ErrorCode::kDegreeViolation: return "degree-violation";
    case ErrorCode::kImproperResult: return "improper-result";
    case ErrorCode::kStabilityViolation: return "stability-violation";
    case ErrorCode::kEmptyBases: return "empty-bases";
    case ErrorCode::kRankOutOfRange: return "rank-out-of-range";
    case ErrorCode::kMissingLayer: return "missing-layer";
    case ErrorCode::kInvalidLayer: return "invalid-layer";
    case ErrorCode::kAlphaOutOfRange: return "alpha-out-of-range";
    case ErrorCode::kInconsistentS: return "inconsistent-s";
    case ErrorCode::kFeasibility: return "feasibility";
    case ErrorCode::kInvalidPartition: return "invalid-partition";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kIncompleteCache: return "incomplete-cache";
    case ErrorCode::kCacheUnavailable: return "cache-unavailable";
    case ErrorCode::kResourceLimit: return "resource-limit";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace dm
