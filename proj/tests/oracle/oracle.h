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

// Reference computations written independently of the library: the
// triangular conditions in cleared-denominator polynomial form, a dense grid
// scan, and brute-force integer search. Used only to cross-check the solver.

#ifndef SPIRALTILE_TESTS_ORACLE_ORACLE_H_
#define SPIRALTILE_TESTS_ORACLE_ORACLE_H_

#include <optional>
#include <utility>
#include <vector>

namespace spiraltile::oracle {

struct TriCase {
  int n = 0;
  int m = 0;
  double phi = 0.0;  // radians
  bool omega_phi = true;  // false: omega = 0
  bool co = true;
};

// Closure angle (2pi +- m*phi)/n.
double Theta(const TriCase& c);

// Zero exactly at the roots. omega = phi, co:
//   k^((m+n)/n) sin(theta) - k^(m/n) sin(theta+phi) + sin(phi)
// and the analogous forms for the other three cases.
double Polynomial(const TriCase& c, double kappa);

// Sign changes of Polynomial over `points` uniform samples starting at 1e-9
// and stopping one step short of 1, each refined by bisection.
std::vector<double> GridRoots(const TriCase& c, int points = 1'000'000);

// Smallest (i_kappa, i_lambda) with i_kappa in [1, m] and
// n*i_kappa - m*i_lambda = 1, found by search. Empty when none exists.
std::optional<std::pair<int, int>> BruteBezout(int n, int m);

}  // namespace spiraltile::oracle

#endif  // SPIRALTILE_TESTS_ORACLE_ORACLE_H_
