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
#include <functional>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "spiraltile/errors.h"

namespace spiraltile {
namespace {

using namespace spiraltile::testing;

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInternalInconsistency;
}

TEST(RelationsTest, SigmaMatchesHighPrecisionValue) {
  EXPECT_NEAR(SigmaFrom(0.8158197069207165, Angle::Degrees(20)).degrees(),
              50.0906175475, 1e-9);
  EXPECT_NEAR(SigmaFrom(0.75, Angle::Degrees(30)).degrees(), 46.93569, 1e-5);
  EXPECT_EQ(CodeOf([] { SigmaFrom(1.0, Angle()); }),
            ErrorCode::kUndefinedAngle);
}

TEST(RelationsTest, ThetaFromClosure) {
  EXPECT_NEAR(ThetaFrom(13, 1, Angle::Degrees(14.6), RotationSense::kCo)
                  .degrees(),
              28.8153846154, 1e-9);
  EXPECT_NEAR(ThetaFrom(8, 13, Angle::Degrees(20), RotationSense::kContra)
                  .degrees(),
              12.5, 1e-12);
  // n = 1 co-rotating cannot close below pi; m*phi >= 2pi leaves nothing.
  EXPECT_EQ(CodeOf([] {
              ThetaFrom(1, 1, Angle::Degrees(10), RotationSense::kCo);
            }),
            ErrorCode::kAngleOutOfRange);
  EXPECT_EQ(CodeOf([] {
              ThetaFrom(8, 13, Angle::Degrees(30), RotationSense::kContra);
            }),
            ErrorCode::kAngleOutOfRange);
}

TEST(RelationsTest, ReciprocalOmegaConvention) {
  // n = 6, m = 4, phi = 30, kappa = 0.75, contra-rotating.
  const Angle theta = ThetaFrom(6, 4, Angle::Degrees(30), kContra);
  const double lambda = LambdaPower(0.75, 6, 4);
  const Angle sigma = SigmaFrom(0.75, Angle::Degrees(30));
  EXPECT_NEAR(theta.degrees(), 40.0, 1e-12);
  EXPECT_NEAR(lambda, 0.8254818, 1e-7);
  EXPECT_NEAR(
      OmegaFrom(EffectiveLambda(lambda, kContra), theta, sigma).degrees(),
      37.781, 1e-3);
}

TEST(RelationsTest, TriangularCurvesMeetPowerCurveAtRoots) {
  const Angle phi = Angle::Degrees(20);
  const Angle theta = ThetaFrom(12, 2, phi, kCo);
  for (double k : {0.8158197069207165, 0.006164405760752332}) {
    EXPECT_NEAR(LambdaTri(k, phi, theta, kOmegaPhi, kCo),
                LambdaPower(k, 12, 2), 1e-12);
  }
  const Angle t4 = ThetaFrom(10, 1, phi, kCo);
  EXPECT_NEAR(LambdaTri(0.9427333267716473, phi, t4, kOmegaZero, kCo),
              0.994120171378747, 1e-12);
  const Angle t3e = ThetaFrom(5, 1, Angle::Degrees(21), kContra);
  EXPECT_NEAR(LambdaTri(0.7176199014216589, Angle::Degrees(21), t3e,
                        kOmegaPhi, kContra),
              0.935791066415921, 1e-12);
}

TEST(RelationsTest, PolesAreReported) {
  const Angle phi = Angle::Degrees(20);
  const Angle theta = ThetaFrom(12, 2, phi, kCo);
  // Beyond I the omega = phi co-rotating denominator turns negative.
  const double i = std::sin((theta + phi).radians()) /
                   std::sin(theta.radians());
  EXPECT_GT(i, 1.0);
  EXPECT_EQ(CodeOf([&] {
              LambdaTri(1.6, phi, theta, kOmegaPhi, kCo);
            }),
            ErrorCode::kPole);
  EXPECT_FALSE(TryLambdaTri(1.6, phi, theta, kOmegaPhi, kCo).has_value());
}

TEST(RelationsTest, DiagnosticPoints) {
  const Angle phi = Angle::Degrees(20);
  const Angle theta = Angle::Degrees(400.0 / 12.0);
  const DiagnosticPoints co = DiagnosticPointsFor(phi, theta, kOmegaPhi, kCo);
  ASSERT_TRUE(co.a && co.i && co.h);
  EXPECT_FALSE(co.reciprocal);
  EXPECT_NEAR(*co.a, 0.4263935, 1e-7);
  EXPECT_NEAR(*co.i, 1.4597090, 1e-7);
  EXPECT_NEAR(*co.h, 1.3539228, 1e-7);
  const DiagnosticPoints contra =
      DiagnosticPointsFor(phi, theta, kOmegaPhi, kContra);
  EXPECT_TRUE(contra.reciprocal);
  ASSERT_TRUE(contra.a && contra.h);
  EXPECT_NEAR(*contra.a, 1.0 / *co.a, 1e-12);
  EXPECT_NEAR(*contra.h, 1.0 / *co.h, 1e-12);
}

TEST(RelationsTest, BranchSenses) {
  const SpiralSystem fig2b = Quad(13, 1, 14.6, 0.484, kCo);
  const BranchSenses b2 =
      BranchSensesFor(fig2b.sigma, fig2b.omega, fig2b.phi, fig2b.theta);
  ASSERT_TRUE(b2.combined.has_value());
  EXPECT_EQ(*b2.combined, RotationSense::kCo);
  const SpiralSystem fig5 = Quad(8, 13, 20, 0.78, kContra);
  const BranchSenses b5 =
      BranchSensesFor(fig5.sigma, fig5.omega, fig5.phi, fig5.theta);
  ASSERT_TRUE(b5.combined.has_value());
  EXPECT_EQ(*b5.combined, RotationSense::kContra);
  EXPECT_EQ(ToString(BranchRotation::kClockwise), "clockwise");
}

TEST(RelationsTest, InteriorAnglesSumToFullTurn) {
  for (const SpiralSystem& s :
       {Quad(13, 1, 14.6, 0.484, kCo), Quad(8, 13, 20, 0.78, kContra),
        Tri(kOmegaPhi, 12, 2, 20, kCo)}) {
    const InteriorAngles a = InteriorAnglesFor(s.omega, s.phi, s.theta);
    double sum = 0.0;
    for (Angle x : a.ToArray()) sum += x.radians();
    EXPECT_NEAR(sum, kTwoPi, 1e-12);
  }
}

}  // namespace
}  // namespace spiraltile
