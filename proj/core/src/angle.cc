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

#include "spiraltile/angle.h"

#include <cmath>

#include "spiraltile/errors.h"

namespace spiraltile {
namespace {

constexpr double kRadPerDeg = kPi / 180.0;
constexpr double kDegPerRad = 180.0 / kPi;

void RequireFinite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " must be finite");
  }
}

}  // namespace

Angle Angle::Radians(double radians) {
  RequireFinite(radians, "angle");
  return Angle(radians);
}

Angle Angle::Degrees(double degrees) {
  RequireFinite(degrees, "angle");
  return Angle(degrees * kRadPerDeg);
}

double Angle::degrees() const { return radians_ * kDegPerRad; }

double AngleDeg(Angle a) {
  RequireFinite(a.radians(), "angle");
  return a.degrees();
}

Angle AngleFromDeg(double degrees) { return Angle::Degrees(degrees); }

double WrapPi(double radians) {
  double r = std::remainder(radians, kTwoPi);
  if (r <= -kPi) r += kTwoPi;
  return r;
}

double WrapTwoPi(double radians) {
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

}  // namespace spiraltile
