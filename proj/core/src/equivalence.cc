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

#include "spiraltile/equivalence.h"

#include <cmath>
#include <string>

#include "spiraltile/errors.h"
#include "spiraltile/relations.h"

namespace spiraltile {
namespace {

constexpr double kBoundaryTolerance = 1e-12;
constexpr double kConsistencyTolerance = 1e-12;

[[noreturn]] void Unclassifiable(const std::string& why) {
  throw Error(ErrorCode::kUnclassifiableCase, why);
}

}  // namespace

BarParameters BarParametersFor(double kappa, double lambda, Angle phi,
                               Angle theta, RotationSense sense) {
  if (!(kappa > 0.0 && lambda > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "kappa and lambda must be > 0");
  }
  if (theta <= phi) {
    throw Error(ErrorCode::kInvalidArgument,
                "theta <= phi: use the equivalence case selection");
  }
  BarParameters b;
  b.lambda_bar =
      sense == RotationSense::kCo ? kappa / lambda : kappa * lambda;
  b.theta_bar = theta - phi;
  return b;
}

EquivalenceCase SelectEquivalenceCase(const SpiralSystem& s) {
  const double gap = s.theta.radians() - s.phi.radians();
  if (std::abs(gap) <= kBoundaryTolerance) {
    Unclassifiable("theta equals phi: no equivalence case applies");
  }
  EquivalenceCase c;
  if (s.sense == RotationSense::kContra) {
    if (gap < 0.0) Unclassifiable("contra-rotating system with theta < phi");
    c.case_id = 5;
    c.m_bar = s.n + s.m;
    c.sense_bar = RotationSense::kContra;
    c.lambda_bar = s.kappa * s.lambda;
    c.theta_bar = s.theta - s.phi;
    return c;
  }
  if (s.n == s.m) Unclassifiable("n equals m: no equivalence case applies");
  const bool theta_above = gap > 0.0;
  const bool n_above = s.n > s.m;
  if (theta_above) {
    c.case_id = n_above ? 1 : 2;
    c.theta_bar = s.theta - s.phi;
  } else {
    c.case_id = n_above ? 4 : 3;
    c.theta_bar = s.phi - s.theta;
  }
  c.m_bar = n_above ? s.n - s.m : s.m - s.n;
  c.lambda_bar = n_above ? s.kappa / s.lambda : s.lambda / s.kappa;
  c.sense_bar = (c.case_id == 1 || c.case_id == 3) ? RotationSense::kContra
                                                    : RotationSense::kCo;
  return c;
}

EquivalenceResult ToOmegaPhiEquivalent(const SpiralSystem& s) {
  if (s.family != Family::kTriangleOmegaZero) {
    throw Error(ErrorCode::kInvalidArgument,
                "family: the equivalence transform needs \"tri-omega-zero\"");
  }
  const FeasibilityVerdict v = ValidateSystem(s);
  if (!v.ok()) {
    throw Error(ErrorCode::kInvalidArgument,
                "system violates " + v.violations.front().invariant);
  }
  const EquivalenceCase c = SelectEquivalenceCase(s);

  const double power = LambdaPower(s.kappa, s.n, c.m_bar);
  if (std::abs(power - c.lambda_bar) > kConsistencyTolerance) {
    throw Error(ErrorCode::kInternalInconsistency,
                "lambda_bar differs from kappa^(m_bar/n) by " +
                    std::to_string(std::abs(power - c.lambda_bar)));
  }

  EquivalenceResult r;
  r.case_id = c.case_id;
  r.original = s;
  SpiralSystem& e = r.equivalent;
  e.n = s.n;
  e.m = c.m_bar;
  e.phi = s.phi;
  e.kappa = s.kappa;
  e.theta = c.theta_bar;
  e.lambda = c.lambda_bar;
  e.sigma = s.sigma;
  e.sense = c.sense_bar;
  r.omega_bar =
      OmegaFrom(EffectiveLambda(e.lambda, e.sense), e.theta, e.sigma);
  r.omega_bar_equals_phi =
      std::abs((r.omega_bar - s.phi).radians()) < kOmegaBarTolerance;
  if (r.omega_bar_equals_phi) {
    e.family = Family::kTriangleOmegaPhi;
    e.omega = s.phi;
  } else {
    e.family = Family::kQuadrangular;
    e.omega = r.omega_bar;
  }
  const FeasibilityVerdict ve = ValidateSystem(e);
  if (!ve.ok()) {
    throw Error(ErrorCode::kInternalInconsistency,
                "equivalent system violates " +
                    ve.violations.front().invariant + " (residual " +
                    std::to_string(ve.violations.front().residual) + ")");
  }
  return r;
}

}  // namespace spiraltile
