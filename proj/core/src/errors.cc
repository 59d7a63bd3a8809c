// Copyright 2026 The Spiraltile Authors.
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

#include "spiraltile/errors.h"

namespace spiraltile {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kAngleOutOfRange:
      return "AngleOutOfRange";
    case ErrorCode::kUndefinedAngle:
      return "UndefinedAngle";
    case ErrorCode::kPole:
      return "Pole";
    case ErrorCode::kClosureInfeasible:
      return "ClosureInfeasible";
    case ErrorCode::kNoSolution:
      return "NoSolution";
    case ErrorCode::kDegenerateFamily:
      return "DegenerateFamily";
    case ErrorCode::kNoTransition:
      return "NoTransition";
    case ErrorCode::kUnclassifiableCase:
      return "UnclassifiableCase";
    case ErrorCode::kNoDivergenceAngle:
      return "NoDivergenceAngle";
    case ErrorCode::kDegenerateGeometry:
      return "DegenerateGeometry";
    case ErrorCode::kNonConvergent:
      return "NonConvergent";
    case ErrorCode::kInternalInconsistency:
      return "InternalInconsistency";
  }
  return "Unknown";
}

bool IsDomainOutcome(ErrorCode code) {
  switch (code) {
    case ErrorCode::kAngleOutOfRange:
    case ErrorCode::kClosureInfeasible:
    case ErrorCode::kNoSolution:
    case ErrorCode::kDegenerateFamily:
    case ErrorCode::kNoTransition:
    case ErrorCode::kUnclassifiableCase:
    case ErrorCode::kNoDivergenceAngle:
    case ErrorCode::kNonConvergent:
      return true;
    default:
      return false;
  }
}

}  // namespace spiraltile
