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

#ifndef SPIRALTILE_SOLVER_H_
#define SPIRALTILE_SOLVER_H_

#include <optional>
#include <string>
#include <vector>

#include "spiraltile/model.h"
#include "spiraltile/relations.h"

namespace spiraltile {

// One evaluated inequality. Angle-valued sides are expressed in degrees.
struct RuleCheck {
  std::string rule_id;
  std::string inequality;
  double lhs = 0.0;
  double rhs = 0.0;
  bool passed = false;
  bool applicable = false;
};

struct FeasibilityReport {
  Angle theta;
  std::vector<RuleCheck> rules;

  // True when no applicable rule failed.
  bool AllApplicablePassed() const;
  const RuleCheck* Find(std::string_view rule_id) const;
};

// Evaluates the full rule set for a request. Every rule appears exactly once
// and is marked applicable or not by family and sense. The quadrangular
// branch-combination rule needs kappa and is inapplicable without it.
// Throws kAngleOutOfRange when theta cannot be formed.
FeasibilityReport Feasibility(Family family, int n, int m, Angle phi,
                              RotationSense sense,
                              std::optional<double> kappa = std::nullopt);

// Direct design of a quadrangular system from (n, m, phi, kappa, sense).
// Throws kClosureInfeasible when the branch senses contradict the requested
// sense, kAngleOutOfRange from ThetaFrom.
SpiralSystem DesignQuadrangular(const DesignRequest& req);

struct Solution {
  double kappa = 0.0;
  double lambda = 0.0;
  Angle sigma;
  Angle omega;
  SpiralSystem system;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
};

struct SolveReport {
  DesignRequest request;
  Angle theta;
  DiagnosticPoints diagnostics;
  FeasibilityReport feasibility;
  std::vector<Solution> solutions;  // ascending kappa
  bool tangent = false;
  // The omega = 0 co-rotating curve meets the power curve at kappa = 0; that
  // intersection has no geometric meaning and is never reported.
  bool zero_root_excluded = false;
};

// Residual kappa^(m/n) - LambdaTri(kappa) of a triangular family, or nullopt
// outside the curve's domain.
std::optional<double> TriangularResidual(double kappa, int n, int m,
                                         Angle phi, Angle theta,
                                         Family family, RotationSense sense);

inline constexpr int kScanPoints = 4096;
inline constexpr double kScanFloor = 1e-9;
inline constexpr double kRootTolerance = 1e-12;

// Finds every root of the triangular residual on (kScanFloor, kappa_sup).
// Throws kNoSolution when a rule proves that no root exists and
// kDegenerateFamily for omega = 0 with phi = theta.
SolveReport SolveTriangular(const DesignRequest& req);

// Picks one solved system: solution_index when given, the largest kappa
// otherwise. Throws kNoSolution when nothing was found.
SpiralSystem SelectSolution(const SolveReport& report);

struct PhiMaxResult {
  int n = 0;
  int m = 0;
  Angle phi_max;
  double kappa_at_tangency = 0.0;
};

// Largest phi for which the co-rotating omega = phi family still has two
// roots; kappa is the merged double root there. Throws kNoTransition.
PhiMaxResult PhiMax(int n, int m);

struct PhiMaxCell {
  int n = 0;
  int m = 0;
  std::optional<PhiMaxResult> result;
  std::string error;  // set when result is empty
};

// Evaluates PhiMax for every (m, n) pair, m-major. Cells run concurrently
// when parallel is true; the output is identical either way.
std::vector<PhiMaxCell> PhiMaxTable(int m_lo, int m_hi, int n_lo, int n_hi,
                                    bool parallel = true);

}  // namespace spiraltile

#endif  // SPIRALTILE_SOLVER_H_
