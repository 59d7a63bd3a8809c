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

#ifndef SPIRALTILE_ANGLE_H_
#define SPIRALTILE_ANGLE_H_

#include <compare>
#include <numbers>

namespace spiraltile {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// A plane angle stored in radians. Degrees appear only at I/O boundaries.
class Angle {
 public:
  constexpr Angle() = default;

  // Both factories reject non-finite input with ErrorCode::kInvalidArgument.
  static Angle Radians(double radians);
  static Angle Degrees(double degrees);

  constexpr double radians() const { return radians_; }
  double degrees() const;

  constexpr Angle operator-() const { return Angle(-radians_); }
  constexpr Angle operator+(Angle o) const { return Angle(radians_ + o.radians_); }
  constexpr Angle operator-(Angle o) const { return Angle(radians_ - o.radians_); }
  constexpr Angle operator*(double k) const { return Angle(radians_ * k); }
  constexpr Angle operator/(double k) const { return Angle(radians_ / k); }
  constexpr auto operator<=>(const Angle&) const = default;

 private:
  constexpr explicit Angle(double radians) : radians_(radians) {}

  double radians_ = 0.0;
};

constexpr Angle operator*(double k, Angle a) { return a * k; }

double AngleDeg(Angle a);
Angle AngleFromDeg(double degrees);

// Maps an angle difference into (-pi, pi].
double WrapPi(double radians);

// Maps an angle into [0, 2 pi).
double WrapTwoPi(double radians);

}  // namespace spiraltile

#endif  // SPIRALTILE_ANGLE_H_
