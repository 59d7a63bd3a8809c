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

#ifndef SPIRALTILE_ERRORS_H_
#define SPIRALTILE_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace spiraltile {

enum class ErrorCode {
  kInvalidArgument,
  kAngleOutOfRange,
  kUndefinedAngle,
  kPole,
  kClosureInfeasible,
  kNoSolution,
  kDegenerateFamily,
  kNoTransition,
  kUnclassifiableCase,
  kNoDivergenceAngle,
  kDegenerateGeometry,
  kNonConvergent,
  kInternalInconsistency,
};

// Stable identifier used in JSON payloads, e.g. "ClosureInfeasible".
std::string_view ErrorCodeName(ErrorCode code);

// True for outcomes that describe an infeasible design rather than a
// malformed request or a program fault.
bool IsDomainOutcome(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spiraltile

#endif  // SPIRALTILE_ERRORS_H_
