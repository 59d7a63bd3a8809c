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

#ifndef SPIRALTILE_TESTS_UNIT_FIXTURES_H_
#define SPIRALTILE_TESTS_UNIT_FIXTURES_H_

#include "spiraltile/model.h"
#include "spiraltile/solver.h"

namespace spiraltile::testing {

inline DesignRequest Request(Family family, int n, int m, double phi_deg,
                             RotationSense sense,
                             std::optional<double> kappa = std::nullopt) {
  DesignRequest r;
  r.family = family;
  r.n = n;
  r.m = m;
  r.phi = Angle::Degrees(phi_deg);
  r.kappa = kappa;
  r.sense = sense;
  return r;
}

inline SpiralSystem Quad(int n, int m, double phi_deg, double kappa,
                         RotationSense sense) {
  return DesignQuadrangular(
      Request(Family::kQuadrangular, n, m, phi_deg, sense, kappa));
}

// Largest-kappa root of a triangular request.
inline SpiralSystem Tri(Family family, int n, int m, double phi_deg,
                        RotationSense sense) {
  return SelectSolution(
      SolveTriangular(Request(family, n, m, phi_deg, sense)));
}

constexpr auto kCo = RotationSense::kCo;
constexpr auto kContra = RotationSense::kContra;
constexpr auto kQuad = Family::kQuadrangular;
constexpr auto kOmegaPhi = Family::kTriangleOmegaPhi;
constexpr auto kOmegaZero = Family::kTriangleOmegaZero;

}  // namespace spiraltile::testing

#endif  // SPIRALTILE_TESTS_UNIT_FIXTURES_H_
