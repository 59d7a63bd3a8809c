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

#include "spiraltile/lattice.h"

#include <cmath>
#include <functional>
#include <set>
#include <utility>

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

TEST(LatticeTest, VertexPlacement) {
  const SpiralSystem s = Quad(8, 13, 20, 0.78, kContra);
  const Point2 origin{2.0, -1.0};
  const VertexLattice lat =
      GenerateLattice(s, 3.0, Angle::Degrees(10), {0, 8}, {0, 13}, origin);
  EXPECT_EQ(lat.s_lambda(), -1);
  EXPECT_EQ(lat.s_kappa(), 1);
  const PolarPoint p = lat.Polar(2, 3);
  EXPECT_NEAR(p.radius, 3.0 * std::pow(s.lambda, 2) * std::pow(s.kappa, 3),
              1e-14);
  EXPECT_NEAR(p.angle, (10.0 - 2 * 12.5 + 3 * 20.0) * kPi / 180.0, 1e-14);
  const Point2 c = lat.Cartesian(0, 0);
  EXPECT_NEAR(c.x, 2.0 + 3.0 * std::cos(10 * kPi / 180), 1e-14);
  EXPECT_NEAR(c.y, -1.0 + 3.0 * std::sin(10 * kPi / 180), 1e-14);
  EXPECT_TRUE(lat.Contains(8, 13));
  EXPECT_FALSE(lat.Contains(9, 0));
}

TEST(LatticeTest, ReferenceFiguresClose) {
  for (const SpiralSystem& s :
       {Quad(13, 1, 14.6, 0.484, kCo), Quad(13, 2, 15, 0.486, kCo),
        Quad(11, 1, 24, 0.512, kContra), Tri(kOmegaPhi, 12, 2, 20, kCo),
        Tri(kOmegaPhi, 5, 1, 21, kContra), Tri(kOmegaZero, 10, 1, 20, kCo),
        Tri(kOmegaPhi, 10, 9, 20, kContra), Quad(8, 13, 20, 0.78, kContra)}) {
    const VertexLattice lat =
        GenerateLattice(s, 1.0, Angle(), {-2, 2 * s.n}, {-1, 2 * s.m});
    EXPECT_LT(VerifyClosure(lat, s), 1e-9) << s.n << "," << s.m;
  }
}

TEST(LatticeTest, PerturbedLatticeFailsClosure) {
  SpiralSystem s = Quad(13, 1, 14.6, 0.484, kCo);
  s.lambda *= 1.0 + 1e-6;
  const VertexLattice lat = GenerateLattice(s, 1.0, Angle(), {0, 26}, {0, 2});
  EXPECT_GT(VerifyClosure(lat, s), 1e-6);
  s = Quad(13, 1, 14.6, 0.484, kCo);
  s.theta = s.theta + Angle::Radians(1e-7);
  EXPECT_GT(VerifyClosure(GenerateLattice(s, 1.0, Angle(), {0, 26}, {0, 2}),
                          s),
            1e-7);
  EXPECT_EQ(CodeOf([&] {
              VerifyClosure(GenerateLattice(s, 1.0, Angle(), {0, 5}, {0, 5}),
                            s);
            }),
            ErrorCode::kInvalidArgument);
}

TEST(LatticeTest, RejectsBadInput) {
  const SpiralSystem s = Quad(13, 1, 14.6, 0.484, kCo);
  EXPECT_EQ(CodeOf([&] { GenerateLattice(s, 0.0, Angle(), {0, 1}, {0, 1}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { GenerateLattice(s, 1.0, Angle(), {2, 1}, {0, 1}); }),
            ErrorCode::kInvalidArgument);
}

TEST(LatticeTest, ClipsUnderflowWithWarning) {
  const SpiralSystem s = Quad(13, 1, 14.6, 0.484, kCo);
  const VertexLattice lat =
      GenerateLattice(s, 1.0, Angle(), {0, 13}, {0, 5000});
  EXPECT_FALSE(lat.warnings().empty());
  EXPECT_LT(lat.j_range().hi, 5000);
  EXPECT_GT(lat.Polar(13, lat.j_range().hi).radius, 0.0);
}

TEST(LatticeTest, LocateCenterRecoversSpiral) {
  const SpiralSystem s = Quad(8, 13, 20, 0.78, kContra);
  const Point2 origin{0.25, -0.5};
  const VertexLattice lat =
      GenerateLattice(s, 2.0, Angle::Degrees(33), {0, 2}, {0, 2}, origin);
  const CenterEstimate c =
      LocateCenter(lat.Cartesian(0, 0), lat.Cartesian(0, 1),
                   lat.Cartesian(0, 2));
  EXPECT_NEAR(c.center.x, origin.x, 1e-12);
  EXPECT_NEAR(c.center.y, origin.y, 1e-12);
  EXPECT_NEAR(c.kappa, 0.78, 1e-12);
  EXPECT_NEAR(c.phi.degrees(), 20.0, 1e-9);
  EXPECT_NEAR(c.sigma.degrees(), s.sigma.degrees(), 1e-9);
}

TEST(LatticeTest, LocateCenterDegenerateInput) {
  EXPECT_EQ(CodeOf([] { LocateCenter({0, 0}, {1, 0}, {3, 0}); }),
            ErrorCode::kDegenerateGeometry);
  EXPECT_EQ(CodeOf([] { LocateCenter({0, 0}, {0, 0}, {1, 1}); }),
            ErrorCode::kDegenerateGeometry);
  // Equal chords: a pure rotation has no finite spiral centre here.
  EXPECT_EQ(CodeOf([] { LocateCenter({1, 0}, {0, 1}, {-1, 0}); }),
            ErrorCode::kNonConvergent);
}

TEST(LatticeTest, CellAnglesMatchExpectation) {
  for (const SpiralSystem& s :
       {Quad(13, 1, 14.6, 0.484, kCo), Quad(8, 13, 20, 0.78, kContra),
        Tri(kOmegaPhi, 12, 2, 20, kCo), Tri(kOmegaPhi, 5, 1, 21, kContra),
        Tri(kOmegaZero, 10, 1, 20, kCo), Tri(kOmegaZero, 8, 2, 15, kContra)}) {
    const VertexLattice lat = GenerateLattice(s, 1.0, Angle(), {0, 3}, {0, 3});
    const CellSet cells = BuildCells(lat, s);
    ASSERT_EQ(cells.cells.size(), 9u);
    const auto want = ExpectedCellAngles(s);
    for (const Cell& c : cells.cells) {
      const auto got = MeasuredCellAngles(c);
      for (int k = 0; k < 4; ++k) {
        // A collapsed vertex may measure as 0 or 2pi.
        EXPECT_NEAR(WrapPi(got[k].radians() - want[k].radians()), 0.0, 1e-9)
            << ToString(s.family) << " " << ToString(s.sense) << " vertex "
            << k;
      }
    }
    if (s.family != kQuad) {
      const Cell& c = cells.cells.front();
      ASSERT_GE(c.degenerate_vertex, 0);
      const double a = MeasuredCellAngles(c)[c.degenerate_vertex].radians();
      // The degenerate vertex is straight (omega = phi) or the tip of a
      // sliver whose neighbour collapses (omega = 0).
      if (s.family == kOmegaPhi) {
        EXPECT_NEAR(a, kPi, 1e-9);
      }
      EXPECT_EQ(c.degeneracy, s.family == kOmegaPhi ? CellDegeneracy::kCollinear
                                                    : CellDegeneracy::kReflex);
    }
  }
}

TEST(LatticeTest, RosetteCoversOneTurnOnce) {
  for (const SpiralSystem& s :
       {Quad(13, 1, 14.6, 0.484, kCo), Quad(8, 13, 20, 0.78, kContra),
        Tri(kOmegaPhi, 12, 2, 20, kCo)}) {
    const Rosette r = BuildRosette(s, 1.0, Angle(), 3 * s.m);
    ASSERT_FALSE(r.cells.cells.empty());
    std::set<std::pair<long long, long long>> seen;
    for (const Cell& c : r.cells.cells) {
      EXPECT_GE(c.i, 0);
      EXPECT_LT(c.i, s.n);
      const PolarPoint outer = r.lattice.Polar(c.i, c.j);
      EXPECT_LE(outer.radius, 1.0 + 1e-12);
      // Identify tiles by their outer corner position.
      const Point2 p = r.lattice.Cartesian(c.i, c.j);
      seen.insert({std::llround(p.x * 1e9), std::llround(p.y * 1e9)});
    }
    EXPECT_EQ(seen.size(), r.cells.cells.size());
  }
  EXPECT_EQ(CodeOf([] {
              BuildRosette(Quad(13, 1, 14.6, 0.484, kCo), 1.0, Angle(), 0);
            }),
            ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace spiraltile
