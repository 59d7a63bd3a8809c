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

#include "spiraltile/phyllotaxis.h"

#include <cmath>
#include <string>

#include "spiraltile/errors.h"

namespace spiraltile {
namespace {

constexpr double kRatioTolerance = 1e-12;

void CheckResidual(const char* name, double residual) {
  if (!(std::abs(residual) < kResidualTolerance)) {
    throw Error(ErrorCode::kInternalInconsistency,
                std::string(name) + " residual " + std::to_string(residual) +
                    " exceeds tolerance");
  }
}

}  // namespace

ExtendedGcdResult ExtendedGcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  return {old_r, old_s, old_t};
}

DivergenceIndices SolveDivergenceIndices(int n, int m, int winding) {
  if (n < 1 || m < 1) {
    throw Error(ErrorCode::kInvalidArgument, "n and m must be positive");
  }
  if (winding != 1 && winding != -1) {
    throw Error(ErrorCode::kInvalidArgument, "winding must be +1 or -1");
  }
  const ExtendedGcdResult e = ExtendedGcd(n, m);
  if (e.g != 1) {
    throw Error(ErrorCode::kNoDivergenceAngle,
                "gcd(n, m) = " + std::to_string(e.g) +
                    ": the branches admit no divergence angle");
  }
  // n*x = 1 (mod m), so i_kappa = winding*x (mod m), taken in [1, m].
  std::int64_t ik = (winding * e.x) % m;
  if (ik <= 0) ik += m;
  const std::int64_t num = static_cast<std::int64_t>(n) * ik - winding;
  DivergenceIndices d;
  d.i_kappa = static_cast<int>(ik);
  d.i_lambda = static_cast<int>(num / m);
  return d;
}

DivergenceResult Divergence(const SpiralSystem& s) {
  const FeasibilityVerdict v = ValidateSystem(s);
  if (!v.ok()) {
    throw Error(ErrorCode::kInvalidArgument,
                "system violates " + v.violations.front().invariant);
  }
  const bool co = s.sense == RotationSense::kCo;
  const int w = co ? ClosureWinding(s) : 1;
  const DivergenceIndices idx = SolveDivergenceIndices(s.n, s.m, w);
  const double phi = s.phi.radians();
  const double theta = s.theta.radians();

  DivergenceResult r;
  r.i_kappa = idx.i_kappa;
  r.i_lambda = idx.i_lambda;
  const double d = co ? w * (r.i_lambda * theta - r.i_kappa * phi)
                      : r.i_lambda * theta + r.i_kappa * phi;
  r.d = Angle::Radians(d);
  r.i_kappa_prime = s.m - r.i_kappa;
  r.i_lambda_prime = s.n - r.i_lambda;
  r.d_prime = Angle::Radians(kTwoPi - d);

  CheckResidual("n*d", co ? kTwoPi * r.i_lambda - phi - s.n * d
                          : kTwoPi * r.i_lambda + phi - s.n * d);
  CheckResidual("m*d", kTwoPi * r.i_kappa - theta - s.m * d);
  if (!(d > 0.0 && d < kTwoPi)) {
    throw Error(ErrorCode::kInternalInconsistency,
                "divergence angle outside (0, 360)");
  }

  r.r = std::pow(s.kappa, 1.0 / s.n);
  const double r_lambda = std::pow(s.lambda, 1.0 / s.m);
  if (std::abs(r.r - r_lambda) > kRatioTolerance) {
    throw Error(ErrorCode::kInternalInconsistency,
                "kappa^(1/n) and lambda^(1/m) disagree");
  }
  r.big_r = 1.0 / r.r;
  return r;
}

}  // namespace spiraltile
