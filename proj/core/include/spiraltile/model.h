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

#ifndef SPIRALTILE_MODEL_H_
#define SPIRALTILE_MODEL_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spiraltile/angle.h"

namespace spiraltile {

// Absolute tolerance applied to every angle and ratio residual.
inline constexpr double kResidualTolerance = 1e-9;

// Relative rotation of the kappa branches versus the lambda branches.
enum class RotationSense { kCo, kContra };

enum class Family { kQuadrangular, kTriangleOmegaPhi, kTriangleOmegaZero };

std::string_view ToString(RotationSense sense);  // "co" | "contra"
std::string_view ToString(Family family);  // "quad" | "tri-omega-phi" | ...
RotationSense ParseRotationSense(std::string_view text);
Family ParseFamily(std::string_view text);

inline bool IsTriangular(Family family) {
  return family != Family::kQuadrangular;
}

// One closed spiral tiling. Ratios kappa and lambda are always stored as
// the representative below one; contra-rotating evaluation uses 1/lambda.
struct SpiralSystem {
  int n = 0;  // branches in the lambda direction
  int m = 0;  // branches in the kappa direction
  Angle phi;
  Angle theta;
  double kappa = 0.0;
  double lambda = 0.0;
  Angle sigma;
  Angle omega;
  RotationSense sense = RotationSense::kCo;
  Family family = Family::kQuadrangular;
};

// Lambda as it enters the shape relations: lambda for co-rotating systems,
// 1/lambda for contra-rotating ones.
double EffectiveLambda(double lambda, RotationSense sense);

// Signed number of full turns w in n*theta = w*2pi + m*phi (co) or
// n*theta = w*2pi - m*phi (contra), rounded to the nearest integer.
int ClosureWinding(const SpiralSystem& s);

struct Violation {
  std::string invariant;
  double residual = 0.0;
};

struct FeasibilityVerdict {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

// Checks every typed invariant of SpiralSystem and reports each failure with
// its residual. Never throws.
FeasibilityVerdict ValidateSystem(const SpiralSystem& s);

struct DesignRequest {
  Family family = Family::kQuadrangular;
  int n = 0;
  int m = 0;
  Angle phi;
  std::optional<double> kappa;
  RotationSense sense = RotationSense::kCo;
  std::optional<int> solution_index;
};

// Throws Error(kInvalidArgument) naming the offending field.
void ValidateRequest(const DesignRequest& req);

}  // namespace spiraltile

#endif  // SPIRALTILE_MODEL_H_
