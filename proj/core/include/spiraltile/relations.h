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

// Closed-form scalar relations between the parameters of a spiral tiling.

#ifndef SPIRALTILE_RELATIONS_H_
#define SPIRALTILE_RELATIONS_H_

#include <array>
#include <optional>

#include "spiraltile/angle.h"
#include "spiraltile/model.h"

namespace spiraltile {

// Angle at the centre-facing vertex of a kappa-branch similarity triangle:
// atan2(kappa sin phi, 1 - kappa cos phi). Throws kUndefinedAngle when both
// arguments vanish.
Angle SigmaFrom(double kappa, Angle phi);

// atan2(l sin theta, 1 - l cos theta) - sigma, where l is lambda for
// co-rotating systems and 1/lambda for contra-rotating ones.
Angle OmegaFrom(double lambda_eff, Angle theta, Angle sigma);

// theta from the closure condition: (2pi + m phi)/n (co) or (2pi - m phi)/n
// (contra). Throws kAngleOutOfRange unless theta lies in (0, pi).
Angle ThetaFrom(int n, int m, Angle phi, RotationSense sense);

// kappa^(m/n).
double LambdaPower(double kappa, int n, int m);

// Lambda along a triangular family's shape curve. Co-rotating forms:
//   omega = phi:  sin phi / (sin(theta + phi) - kappa sin theta)
//   omega = 0:    kappa sin phi / (sin theta + kappa sin(phi - theta))
// Contra-rotating systems use the reciprocals. Throws kPole when the value
// is not a positive finite ratio.
double LambdaTri(double kappa, Angle phi, Angle theta, Family family,
                 RotationSense sense);

// Non-throwing LambdaTri; nullopt where the curve is undefined or <= 0.
std::optional<double> TryLambdaTri(double kappa, Angle phi, Angle theta,
                                   Family family, RotationSense sense);

// Intercept (a), pole or zero (i) and value at kappa = 1 (h) of a triangular
// family's shape curve. Contra-rotating systems report the reciprocal
// values. nullopt marks a point that is undefined or not applicable.
struct DiagnosticPoints {
  std::optional<double> a;
  std::optional<double> i;
  std::optional<double> h;
  bool reciprocal = false;
};

DiagnosticPoints DiagnosticPointsFor(Angle phi, Angle theta, Family family,
                                     RotationSense sense);

enum class BranchRotation { kAnticlockwise, kClockwise, kNonConvergent };

struct BranchSenses {
  BranchRotation bkappa = BranchRotation::kNonConvergent;
  BranchRotation blambda = BranchRotation::kNonConvergent;
  // nullopt when either branch family does not converge.
  std::optional<RotationSense> combined;
};

inline constexpr double kBranchEqualityTolerance = 1e-12;

BranchSenses BranchSensesFor(Angle sigma, Angle omega, Angle phi,
                             Angle theta);

// Interior angles of the cell A00, A01, A11, A10 in the reference labelling.
// They always sum to 2pi.
struct InteriorAngles {
  Angle a00;
  Angle a01;
  Angle a11;
  Angle a10;

  std::array<Angle, 4> ToArray() const { return {a00, a01, a11, a10}; }
};

InteriorAngles InteriorAnglesFor(Angle omega, Angle phi, Angle theta);

std::string_view ToString(BranchRotation rotation);

}  // namespace spiraltile

#endif  // SPIRALTILE_RELATIONS_H_
