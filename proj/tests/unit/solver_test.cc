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

#include "spiraltile/solver.h"

#include <cmath>
#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.h"
#include "oracle/oracle.h"
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

TEST(SolverTest, QuadrangularDesigns) {
  const SpiralSystem b = Quad(13, 1, 14.6, 0.484, kCo);
  EXPECT_NEAR(b.theta.degrees(), 28.81538, 1e-5);
  EXPECT_NEAR(b.lambda, 0.9457086, 1e-7);
  const SpiralSystem d = Quad(11, 1, 24, 0.512, kContra);
  EXPECT_NEAR(d.theta.degrees(), 30.54545, 1e-5);
  EXPECT_NEAR(d.lambda, 0.9409575, 1e-7);
  const SpiralSystem f5 = Quad(8, 13, 20, 0.78, kContra);
  EXPECT_NEAR(f5.theta.degrees(), 12.5, 1e-12);
  EXPECT_NEAR(f5.lambda, 0.6678112, 1e-7);
  EXPECT_TRUE(ValidateSystem(f5).ok());
}

TEST(SolverTest, QuadrangularSenseAgreesWithRuleTwo) {
  // Design accepts exactly the kappa values whose branch margins agree
  // with the requested sense.
  int accepted = 0;
  int rejected = 0;
  for (RotationSense sense : {kCo, kContra}) {
    for (int n = 2; n <= 12; ++n) {
      for (int m = 1; m <= 12; ++m) {
        for (double phi : {5.0, 17.0, 41.0, 73.0}) {
          for (double kappa : {0.05, 0.3, 0.6, 0.9, 0.99}) {
            const auto req = Request(kQuad, n, m, phi, sense, kappa);
            FeasibilityReport f;
            try {
              f = Feasibility(kQuad, n, m, req.phi, sense, kappa);
            } catch (const Error&) {
              continue;
            }
            const RuleCheck* r2 = f.Find("R2");
            ASSERT_NE(r2, nullptr);
            if (!r2->applicable) continue;
            try {
              DesignQuadrangular(req);
              ++accepted;
              EXPECT_TRUE(r2->passed);
            } catch (const Error& e) {
              if (e.code() == ErrorCode::kAngleOutOfRange) continue;
              EXPECT_EQ(e.code(), ErrorCode::kClosureInfeasible);
              EXPECT_FALSE(r2->passed);
              ++rejected;
            }
          }
        }
      }
    }
  }
  EXPECT_GT(accepted, 0);
}

TEST(SolverTest, FeasibilityListsEveryRule) {
  const FeasibilityReport f = Feasibility(kOmegaPhi, 12, 2,
                                          Angle::Degrees(20), kCo);
  const std::vector<std::string> ids = {
      "R2", "R4", "R4.phi", "R5", "R5.sum", "R6", "R6a", "R6a.range", "R6b",
      "R7", "R8", "R9", "R9a", "R9b", "R10", "R11", "R11a", "R12"};
  ASSERT_EQ(f.rules.size(), ids.size());
  for (size_t k = 0; k < ids.size(); ++k) EXPECT_EQ(f.rules[k].rule_id, ids[k]);
  EXPECT_FALSE(f.Find("R2")->applicable);
  EXPECT_TRUE(f.Find("R4")->applicable);
  EXPECT_TRUE(f.AllApplicablePassed());
  EXPECT_EQ(f.Find("R99"), nullptr);
}

TEST(SolverTest, TwoRootOmegaPhiCo) {
  const SolveReport r =
      SolveTriangular(Request(kOmegaPhi, 12, 2, 20, kCo));
  ASSERT_EQ(r.solutions.size(), 2u);
  EXPECT_NEAR(r.theta.degrees(), 100.0 / 3.0, 1e-12);
  EXPECT_NEAR(r.solutions[0].kappa, 0.006164405760752332, 1e-12);
  EXPECT_NEAR(r.solutions[1].kappa, 0.8158197069207165, 1e-12);
  EXPECT_NEAR(r.solutions[1].lambda, 0.9666420837151, 1e-12);
  EXPECT_NEAR(r.solutions[1].sigma.degrees(), 50.0906175475, 1e-9);
  EXPECT_NEAR(r.solutions[0].sigma.degrees(), 0.121503255034, 1e-9);
  EXPECT_FALSE(r.tangent);
  for (const Solution& s : r.solutions) {
    EXPECT_LE(s.bracket_lo, s.kappa);
    EXPECT_GE(s.bracket_hi, s.kappa);
  }
  // Default selection is the larger root; index 0 picks the smaller.
  EXPECT_DOUBLE_EQ(SelectSolution(r).kappa, r.solutions[1].kappa);
  auto req = Request(kOmegaPhi, 12, 2, 20, kCo);
  req.solution_index = 0;
  EXPECT_DOUBLE_EQ(SelectSolution(SolveTriangular(req)).kappa,
                   r.solutions[0].kappa);
}

TEST(SolverTest, SingleRootFamilies) {
  const SolveReport e = SolveTriangular(Request(kOmegaPhi, 5, 1, 21, kContra));
  ASSERT_EQ(e.solutions.size(), 1u);
  EXPECT_NEAR(e.theta.degrees(), 67.8, 1e-12);
  EXPECT_NEAR(e.solutions[0].kappa, 0.7176199014216589, 1e-12);
  EXPECT_NEAR(e.solutions[0].lambda, 0.935791066415921, 1e-12);
  EXPECT_NEAR(e.solutions[0].sigma.degrees(), 37.9258949044, 1e-9);

  const SolveReport a = SolveTriangular(Request(kOmegaZero, 10, 1, 20, kCo));
  ASSERT_EQ(a.solutions.size(), 1u);
  EXPECT_TRUE(a.zero_root_excluded);
  EXPECT_NEAR(a.solutions[0].kappa, 0.9427333267716473, 1e-12);
  EXPECT_NEAR(a.solutions[0].lambda, 0.994120171378747, 1e-12);
  EXPECT_NEAR(a.solutions[0].sigma.degrees(), 70.5093706708, 1e-9);

  const SpiralSystem d = Tri(kOmegaPhi, 10, 9, 20, kContra);
  EXPECT_NEAR(d.theta.degrees(), 18.0, 1e-12);
  EXPECT_NEAR(d.kappa, 0.9427333267716473, 1e-12);
  EXPECT_NEAR(d.lambda, 0.948309222479783, 1e-12);

  const SpiralSystem z = Tri(kOmegaZero, 8, 2, 15, kContra);
  EXPECT_NEAR(z.theta.degrees(), 41.25, 1e-12);
  EXPECT_NEAR(z.kappa, 0.9453069963307168, 1e-12);
  EXPECT_NEAR(z.lambda, 0.986037014423543, 1e-12);
  EXPECT_NEAR(z.sigma.degrees(), 70.445148912, 1e-8);

  auto req = Request(kOmegaPhi, 5, 1, 21, kContra);
  req.solution_index = 1;
  EXPECT_EQ(CodeOf([&] { SelectSolution(SolveTriangular(req)); }),
            ErrorCode::kNoSolution);
}

TEST(SolverTest, GatesRejectBeforeScanning) {
  // theta + 2 phi >= 180 for omega = phi co-rotating.
  EXPECT_EQ(CodeOf([] { SolveTriangular(Request(kOmegaPhi, 3, 1, 50, kCo)); }),
            ErrorCode::kNoSolution);
  EXPECT_EQ(CodeOf([] { SolveTriangular(Request(kQuad, 3, 1, 50, kCo, 0.5)); }),
            ErrorCode::kInvalidArgument);
}

TEST(SolverTest, GateVerdictsMatchTheScan) {
  // Whenever a gate rejects, a brute scan of the cleared form finds nothing.
  int gated = 0;
  for (Family family : {kOmegaPhi, kOmegaZero}) {
    for (RotationSense sense : {kCo, kContra}) {
      for (int n = 3; n <= 12; ++n) {
        for (int m = 1; m <= 12; ++m) {
          for (double phi = 2.5; phi < 90; phi += 7.5) {
            try {
              SolveTriangular(Request(family, n, m, phi, sense));
            } catch (const Error& e) {
              if (e.code() != ErrorCode::kNoSolution) continue;
              ++gated;
              oracle::TriCase tc{n, m, phi * kPi / 180.0,
                                 family == kOmegaPhi, sense == kCo};
              EXPECT_TRUE(oracle::GridRoots(tc, 20000).empty())
                  << ToString(family) << " " << ToString(sense) << " n=" << n
                  << " m=" << m << " phi=" << phi;
            }
          }
        }
      }
    }
  }
  EXPECT_GT(gated, 0);
}

TEST(SolverTest, MatchesOracleOnRandomRequests) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> count(1, 15);
  std::uniform_real_distribution<double> phi(1.0, 85.0);
  int checked = 0;
  while (checked < 60) {
    const Family family = rng() % 2 ? kOmegaPhi : kOmegaZero;
    const RotationSense sense = rng() % 2 ? kCo : kContra;
    const auto req = Request(family, count(rng), count(rng), phi(rng), sense);
    SolveReport r;
    try {
      r = SolveTriangular(req);
    } catch (const Error&) {
      continue;
    }
    ++checked;
    oracle::TriCase tc{req.n, req.m, req.phi.radians(), family == kOmegaPhi,
                       sense == kCo};
    const auto want = oracle::GridRoots(tc, 200000);
    ASSERT_EQ(r.solutions.size(), want.size())
        << ToString(family) << " " << ToString(sense) << " n=" << req.n
        << " m=" << req.m << " phi=" << req.phi.degrees();
    for (size_t k = 0; k < want.size(); ++k) {
      EXPECT_NEAR(r.solutions[k].kappa, want[k], 1e-9);
    }
  }
}

TEST(SolverTest, PhiMaxValues) {
  struct Case {
    int n, m;
    double phi_deg, kappa;
  };
  for (const Case& c : {Case{3, 1, 15.7931690483, 0.19245008973},
                        Case{12, 2, 41.1161746917, 0.232958621151},
                        Case{9, 8, 17.1341096045, 0.545950803002},
                        Case{4, 2, 18.7279562966, 0.298035818992},
                        Case{6, 6, 15.0, 0.517638090205}}) {
    const PhiMaxResult r = PhiMax(c.n, c.m);
    EXPECT_NEAR(r.phi_max.degrees(), c.phi_deg, 1e-8) << c.n << "," << c.m;
    EXPECT_NEAR(r.kappa_at_tangency, c.kappa, 1e-8) << c.n << "," << c.m;
  }
}

TEST(SolverTest, PhiMaxSeparatesTwoRootsFromNone) {
  const PhiMaxResult r = PhiMax(7, 3);
  const double deg = r.phi_max.degrees();
  const auto below = SolveTriangular(Request(kOmegaPhi, 7, 3, deg - 0.01, kCo));
  EXPECT_EQ(below.solutions.size(), 2u);
  size_t above = 0;
  try {
    above = SolveTriangular(Request(kOmegaPhi, 7, 3, deg + 0.01, kCo))
                .solutions.size();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoSolution);
  }
  EXPECT_EQ(above, 0u);
}

TEST(SolverTest, PhiMaxTableParallelMatchesSerial) {
  const auto par = PhiMaxTable(1, 3, 3, 6, true);
  const auto ser = PhiMaxTable(1, 3, 3, 6, false);
  ASSERT_EQ(par.size(), 12u);
  ASSERT_EQ(par.size(), ser.size());
  for (size_t k = 0; k < par.size(); ++k) {
    EXPECT_EQ(par[k].m, ser[k].m);
    EXPECT_EQ(par[k].n, ser[k].n);
    ASSERT_TRUE(par[k].result && ser[k].result);
    EXPECT_EQ(par[k].result->phi_max.radians(),
              ser[k].result->phi_max.radians());
  }
  EXPECT_EQ(par.front().m, 1);
  EXPECT_EQ(par.front().n, 3);
  EXPECT_EQ(par[1].n, 4);
}

}  // namespace
}  // namespace spiraltile
