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

// Divergence angle and plastochrone ratio of a closed spiral system.

#ifndef SPIRALTILE_PHYLLOTAXIS_H_
#define SPIRALTILE_PHYLLOTAXIS_H_

#include <cstdint>

#include "spiraltile/model.h"

namespace spiraltile {

struct ExtendedGcdResult {
  std::int64_t g = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
};

// g = gcd(a, b) and a*x + b*y = g. Requires a, b >= 1.
ExtendedGcdResult ExtendedGcd(std::int64_t a, std::int64_t b);

struct DivergenceIndices {
  int i_kappa = 0;
  int i_lambda = 0;
};

// Canonical solution of n*i_kappa - m*i_lambda = winding (winding = +1 or
// -1) with i_kappa in [1, m]. Throws kNoDivergenceAngle when gcd(n, m) != 1.
DivergenceIndices SolveDivergenceIndices(int n, int m, int winding = 1);

struct DivergenceResult {
  int i_kappa = 0;
  int i_lambda = 0;
  Angle d;  // in (0, 2pi)
  int i_kappa_prime = 0;
  int i_lambda_prime = 0;
  Angle d_prime;  // 2pi - d, the same step measured the other way
  double r = 0.0;  // kappa^(1/n) = lambda^(1/m)
  double big_r = 0.0;  // 1/r
};

// Throws kNoDivergenceAngle when gcd(n, m) != 1, kInvalidArgument for an
// invalid system, kInternalInconsistency when the angle identities fail.
DivergenceResult Divergence(const SpiralSystem& s);

}  // namespace spiraltile

#endif  // SPIRALTILE_PHYLLOTAXIS_H_
