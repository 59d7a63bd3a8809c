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

#include "spiraltile/relations.h"

#include <cmath>
#include <string>

#include "spiraltile/errors.h"

namespace spiraltile {
namespace {

std::optional<double> Ratio(double num, double den) {
  if (den == 0.0) return std::nullopt;
  const double r = num / den;
  if (!std::isfinite(r)) return std::nullopt;
  return r;
}

BranchRotation Classify(double value, double threshold) {
  const double diff = value - threshold;
  if (std::abs(diff) <= kBranchEqualityTolerance) {
    return BranchRotation::kNonConvergent;
  }
  return diff < 0.0 ? BranchRotation::kAnticlockwise
                    : BranchRotation::kClockwise;
}

}  // namespace

Angle SigmaFrom(double kappa, Angle phi) {
  const double y = kappa * std::sin(phi.radians());
  const double x = 1.0 - kappa * std::cos(phi.radians());
  if (y == 0.0 && x == 0.0) {
    throw Error(ErrorCode::kUndefinedAngle,
                "sigma undefined: kappa sin(phi) and 1 - kappa cos(phi) "
                "both vanish");
  }
  return Angle::Radians(std::atan2(y, x));
}

Angle OmegaFrom(double lambda_eff, Angle theta, Angle sigma) {
  const double y = lambda_eff * std::sin(theta.radians());
  const double x = 1.0 - lambda_eff * std::cos(theta.radians());
  if (y == 0.0 && x == 0.0) {
    throw Error(ErrorCode::kUndefinedAngle,
                "omega undefined: lambda sin(theta) and 1 - lambda "
                "cos(theta) both vanish");
  }
  return Angle::Radians(std::atan2(y, x)) - sigma;
}

Angle ThetaFrom(int n, int m, Angle phi, RotationSense sense) {
  if (n < 1 || m < 1) {
    throw Error(ErrorCode::kInvalidArgument, "n and m must be positive");
  }
  const double mphi = m * phi.radians();
  if (sense == RotationSense::kContra && mphi >= kTwoPi) {
    throw Error(ErrorCode::kAngleOutOfRange,
                "contra-rotating closure needs m*phi < 360 degrees");
  }
  const double theta =
      (sense == RotationSense::kCo ? kTwoPi + mphi : kTwoPi - mphi) / n;
  if (!(theta > 0.0 && theta < kPi)) {
    throw Error(ErrorCode::kAngleOutOfRange,
                "theta = " + std::to_string(theta * 180.0 / kPi) +
                    " degrees lies outside (0, 180)");
  }
  return Angle::Radians(theta);
}

double LambdaPower(double kappa, int n, int m) {
  return std::pow(kappa, static_cast<double>(m) / n);
}

std::optional<double> TryLambdaTri(double kappa, Angle phi, Angle theta,
                                   Family family, RotationSense sense) {
  const double p = phi.radians();
  const double t = theta.radians();
  double num = 0.0;
  double den = 0.0;
  switch (family) {
    case Family::kTriangleOmegaPhi:
      num = std::sin(p);
      den = std::sin(t + p) - kappa * std::sin(t);
      break;
    case Family::kTriangleOmegaZero:
      num = kappa * std::sin(p);
      den = std::sin(t) + kappa * std::sin(p - t);
      break;
    case Family::kQuadrangular:
      return std::nullopt;
  }
  if (sense == RotationSense::kContra) std::swap(num, den);
  if (!(num > 0.0 && den > 0.0)) return std::nullopt;
  const double lambda = num / den;
  if (!std::isfinite(lambda) || lambda <= 0.0) return std::nullopt;
  return lambda;
}

double LambdaTri(double kappa, Angle phi, Angle theta, Family family,
                 RotationSense sense) {
  if (!IsTriangular(family)) {
    throw Error(ErrorCode::kInvalidArgument,
                "lambda_tri needs a triangular family");
  }
  auto lambda = TryLambdaTri(kappa, phi, theta, family, sense);
  if (!lambda) {
    throw Error(ErrorCode::kPole,
                "shape curve undefined at kappa = " + std::to_string(kappa));
  }
  return *lambda;
}

DiagnosticPoints DiagnosticPointsFor(Angle phi, Angle theta, Family family,
                                     RotationSense sense) {
  const double p = phi.radians();
  const double t = theta.radians();
  DiagnosticPoints d;
  d.reciprocal = sense == RotationSense::kContra;
  // Contra-rotating values are formed as swapped ratios rather than as 1/x,
  // so a co-rotating pole becomes a clean zero.
  auto point = [&](double num, double den) {
    return d.reciprocal ? Ratio(den, num) : Ratio(num, den);
  };
  if (family == Family::kTriangleOmegaPhi) {
    d.a = point(std::sin(p), std::sin(t + p));
    d.i = point(std::sin(t + p), std::sin(t));
    d.h = point(std::sin(p), std::sin(t + p) - std::sin(t));
  } else if (family == Family::kTriangleOmegaZero) {
    d.i = point(-std::sin(t), std::sin(p - t));
    d.h = point(std::sin(p), std::sin(p - t) + std::sin(t));
  }
  return d;
}

BranchSenses BranchSensesFor(Angle sigma, Angle omega, Angle phi,
                             Angle theta) {
  BranchSenses b;
  b.bkappa = Classify(sigma.radians(), kPi / 2 - phi.radians() / 2);
  b.blambda = Classify((omega + sigma).radians(),
                       kPi / 2 - theta.radians() / 2);
  if (b.bkappa != BranchRotation::kNonConvergent &&
      b.blambda != BranchRotation::kNonConvergent) {
    b.combined = b.bkappa == b.blambda ? RotationSense::kCo
                                       : RotationSense::kContra;
  }
  return b;
}

InteriorAngles InteriorAnglesFor(Angle omega, Angle phi, Angle theta) {
  InteriorAngles a;
  a.a01 = Angle::Radians(kPi) + phi - omega;
  a.a11 = theta + omega - phi;
  a.a10 = Angle::Radians(kPi) - theta - omega;
  a.a00 = Angle::Radians(kTwoPi) - a.a01 - a.a11 - a.a10;
  return a;
}

std::string_view ToString(BranchRotation rotation) {
  switch (rotation) {
    case BranchRotation::kAnticlockwise:
      return "anticlockwise";
    case BranchRotation::kClockwise:
      return "clockwise";
    case BranchRotation::kNonConvergent:
      return "non-convergent";
  }
  return "non-convergent";
}

}  // namespace spiraltile
