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

// Re-parameterisation of an omega = 0 system as an equivalent omega = phi
// system sharing n, kappa and phi.

#ifndef SPIRALTILE_EQUIVALENCE_H_
#define SPIRALTILE_EQUIVALENCE_H_

#include "spiraltile/model.h"

namespace spiraltile {

struct BarParameters {
  double lambda_bar = 0.0;
  Angle theta_bar;
};

// lambda_bar = kappa/lambda (co) or kappa*lambda (contra), theta_bar =
// theta - phi. Throws kInvalidArgument for theta <= phi; those inputs go
// through the case selection instead.
BarParameters BarParametersFor(double kappa, double lambda, Angle phi,
                               Angle theta, RotationSense sense);

// Case table:
//   1: co, theta > phi, n > m   theta - phi  kappa/lambda   n - m  contra
//   2: co, theta > phi, n < m   theta - phi  lambda/kappa   m - n  co
//   3: co, theta < phi, n < m   phi - theta  lambda/kappa   m - n  contra
//   4: co, theta < phi, n > m   phi - theta  kappa/lambda   n - m  co
//   5: contra, theta > phi      theta - phi  kappa*lambda   n + m  contra
struct EquivalenceCase {
  int case_id = 0;
  int m_bar = 0;
  RotationSense sense_bar = RotationSense::kCo;
  double lambda_bar = 0.0;
  Angle theta_bar;
};

// Applies the case table to any system. Throws kUnclassifiableCase on the
// boundaries theta = phi and n = m (co-rotating), and for contra-rotating
// systems with theta <= phi.
EquivalenceCase SelectEquivalenceCase(const SpiralSystem& s);

struct EquivalenceResult {
  int case_id = 0;
  SpiralSystem original;
  SpiralSystem equivalent;
  // Shape angle of the equivalent recomputed from its own parameters.
  Angle omega_bar;
  // Cases 1, 2 and 5 land on the omega = phi family. Cases 3 and 4 yield a
  // degenerate quadrangle whose omega_bar equals theta instead.
  bool omega_bar_equals_phi = false;
};

inline constexpr double kOmegaBarTolerance = 1e-6;

// Requires a valid omega = 0 system. Throws kUnclassifiableCase as above and
// kInternalInconsistency when the equivalent fails revalidation.
EquivalenceResult ToOmegaPhiEquivalent(const SpiralSystem& s);

}  // namespace spiraltile

#endif  // SPIRALTILE_EQUIVALENCE_H_
