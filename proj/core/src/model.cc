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

#include "spiraltile/model.h"

#include <cmath>
#include <string>

#include "spiraltile/errors.h"

namespace spiraltile {
namespace {

void Add(FeasibilityVerdict& v, const char* invariant, double residual) {
  v.violations.push_back({invariant, residual});
}

// Residual between an angle and a quadrant-aware arctangent, immune to the
// tan() blow-up near pi/2.
double AtanResidual(double angle, double y, double x) {
  if (y == 0.0 && x == 0.0) return INFINITY;
  return std::abs(WrapPi(angle - std::atan2(y, x)));
}

}  // namespace

std::string_view ToString(RotationSense sense) {
  return sense == RotationSense::kCo ? "co" : "contra";
}

std::string_view ToString(Family family) {
  switch (family) {
    case Family::kQuadrangular:
      return "quad";
    case Family::kTriangleOmegaPhi:
      return "tri-omega-phi";
    case Family::kTriangleOmegaZero:
      return "tri-omega-zero";
  }
  return "quad";
}

RotationSense ParseRotationSense(std::string_view text) {
  if (text == "co") return RotationSense::kCo;
  if (text == "contra") return RotationSense::kContra;
  throw Error(ErrorCode::kInvalidArgument,
              "sense: expected \"co\" or \"contra\", got \"" +
                  std::string(text) + "\"");
}

Family ParseFamily(std::string_view text) {
  if (text == "quad") return Family::kQuadrangular;
  if (text == "tri-omega-phi") return Family::kTriangleOmegaPhi;
  if (text == "tri-omega-zero") return Family::kTriangleOmegaZero;
  throw Error(ErrorCode::kInvalidArgument,
              "family: expected \"quad\", \"tri-omega-phi\" or "
              "\"tri-omega-zero\", got \"" +
                  std::string(text) + "\"");
}

double EffectiveLambda(double lambda, RotationSense sense) {
  return sense == RotationSense::kCo ? lambda : 1.0 / lambda;
}

int ClosureWinding(const SpiralSystem& s) {
  const double turn =
      s.sense == RotationSense::kCo
          ? s.n * s.theta.radians() - s.m * s.phi.radians()
          : s.n * s.theta.radians() + s.m * s.phi.radians();
  return static_cast<int>(std::lround(turn / kTwoPi));
}

FeasibilityVerdict ValidateSystem(const SpiralSystem& s) {
  FeasibilityVerdict v;
  const double phi = s.phi.radians();
  const double theta = s.theta.radians();
  const double omega = s.omega.radians();
  const double sigma = s.sigma.radians();
  for (double x : {phi, theta, omega, sigma, s.kappa, s.lambda}) {
    if (!std::isfinite(x)) {
      Add(v, "finite", INFINITY);
      return v;
    }
  }
  if (s.n < 1) Add(v, "n_positive", 1.0 - s.n);
  if (s.m < 1) Add(v, "m_positive", 1.0 - s.m);
  if (!(s.kappa > 0.0 && s.kappa < 1.0)) {
    Add(v, "kappa_range", s.kappa <= 0.0 ? -s.kappa : s.kappa - 1.0);
  }
  if (!(s.lambda > 0.0 && s.lambda < 1.0)) {
    Add(v, "lambda_range", s.lambda <= 0.0 ? -s.lambda : s.lambda - 1.0);
  }
  if (!(phi > 0.0 && phi < kPi)) {
    Add(v, "phi_range", phi <= 0.0 ? -phi : phi - kPi);
  }
  if (!(theta > 0.0 && theta < kPi)) {
    Add(v, "theta_range", theta <= 0.0 ? -theta : theta - kPi);
  }
  if (!v.ok()) return v;

  // Co-rotating systems may close with either winding (+1 or -1 turn);
  // contra-rotating systems only with +1.
  const int w = ClosureWinding(s);
  const bool winding_ok =
      s.sense == RotationSense::kCo ? (w == 1 || w == -1) : w == 1;
  const int w_used = winding_ok ? w : 1;
  const double closure =
      s.sense == RotationSense::kCo
          ? std::abs(s.n * theta - w_used * kTwoPi - s.m * phi)
          : std::abs(s.n * theta - kTwoPi + s.m * phi);
  if (closure >= kResidualTolerance) Add(v, "closure", closure);

  const double power =
      std::abs(std::pow(s.lambda, s.n) - std::pow(s.kappa, s.m));
  if (power >= kResidualTolerance) Add(v, "power", power);

  const double eq1 = AtanResidual(sigma, s.kappa * std::sin(phi),
                                  1.0 - s.kappa * std::cos(phi));
  if (eq1 >= kResidualTolerance) Add(v, "sigma_relation", eq1);

  const double le = EffectiveLambda(s.lambda, s.sense);
  const double eq2 = AtanResidual(omega + sigma, le * std::sin(theta),
                                  1.0 - le * std::cos(theta));
  if (eq2 >= kResidualTolerance) Add(v, "omega_relation", eq2);

  if (s.family == Family::kTriangleOmegaPhi) {
    const double r = std::abs(omega - phi);
    if (r >= kResidualTolerance) Add(v, "family_omega_phi", r);
  } else if (s.family == Family::kTriangleOmegaZero) {
    const double r = std::abs(omega);
    if (r >= kResidualTolerance) Add(v, "family_omega_zero", r);
  }
  return v;
}

void ValidateRequest(const DesignRequest& req) {
  auto fail = [](const std::string& msg) {
    throw Error(ErrorCode::kInvalidArgument, msg);
  };
  if (req.n < 1) fail("n: must be a positive integer");
  if (req.m < 1) fail("m: must be a positive integer");
  const double phi = req.phi.radians();
  if (!(phi > 0.0 && phi < kPi)) fail("phi_deg: must lie in (0, 180)");
  if (req.family == Family::kQuadrangular) {
    if (!req.kappa) fail("kappa: required for the quad family");
    if (!(*req.kappa > 0.0 && *req.kappa < 1.0)) {
      fail("kappa: must lie in (0, 1)");
    }
  } else {
    if (req.kappa) fail("kappa: not accepted for triangular families");
    if (req.sense == RotationSense::kCo && req.n < 3) {
      fail("n: co-rotating triangular systems need n >= 3");
    }
  }
  if (req.solution_index && *req.solution_index != 0 &&
      *req.solution_index != 1) {
    fail("solution_index: must be 0 or 1");
  }
}

}  // namespace spiraltile
