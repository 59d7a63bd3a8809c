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

// Vertex lattices, cell polygons and centre recovery for spiral tilings.
//
// Vertex A(i, j) sits at radius r0 * lambda^i * kappa^j and polar angle
// alpha0 + s_lambda*i*theta + s_kappa*j*phi around the centre S. Index i
// steps along the lambda direction and j along the kappa direction; in a
// closed system A(i + n, j) and A(i, j + m) coincide.

#ifndef SPIRALTILE_LATTICE_H_
#define SPIRALTILE_LATTICE_H_

#include <array>
#include <string>
#include <vector>

#include "spiraltile/model.h"

namespace spiraltile {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct PolarPoint {
  double radius = 0.0;
  double angle = 0.0;  // radians, not wrapped
};

// Inclusive index range.
struct IndexRange {
  int lo = 0;
  int hi = 0;

  int size() const { return hi - lo + 1; }
};

class VertexLattice {
 public:
  VertexLattice(Point2 origin, double r0, Angle alpha0, int s_lambda,
                int s_kappa, IndexRange i_range, IndexRange j_range,
                std::vector<PolarPoint> vertices,
                std::vector<std::string> warnings);

  Point2 origin() const { return origin_; }
  double r0() const { return r0_; }
  Angle alpha0() const { return alpha0_; }
  int s_lambda() const { return s_lambda_; }
  int s_kappa() const { return s_kappa_; }
  IndexRange i_range() const { return i_range_; }
  IndexRange j_range() const { return j_range_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  bool Contains(int i, int j) const;
  // Both accessors require Contains(i, j).
  const PolarPoint& Polar(int i, int j) const;
  Point2 Cartesian(int i, int j) const;

 private:
  Point2 origin_;
  double r0_;
  Angle alpha0_;
  int s_lambda_;
  int s_kappa_;
  IndexRange i_range_;
  IndexRange j_range_;
  std::vector<PolarPoint> vertices_;  // row-major in i
  std::vector<std::string> warnings_;
};

// Builds A(i, j) over the given ranges. Radii are evaluated in log space;
// rows or columns whose radius would underflow or overflow are clipped and
// a warning is recorded. Throws kInvalidArgument for an invalid system,
// r0 <= 0 or an empty range.
VertexLattice GenerateLattice(const SpiralSystem& s, double r0, Angle alpha0,
                              IndexRange i_range, IndexRange j_range,
                              Point2 origin = {});

// Largest |A(i + n, j) - A(i, j + m)| / radius over the lattice. Throws
// kInvalidArgument when the lattice spans less than one index period.
double VerifyClosure(const VertexLattice& lat, const SpiralSystem& s);

struct CenterEstimate {
  Point2 center;
  double kappa = 0.0;
  Angle phi;  // unsigned turn between consecutive chords
  Angle sigma;
};

// Recovers the centre of the spiral similarity carrying p0 -> p1 -> p2.
// Throws kDegenerateGeometry for coincident or collinear points and
// kNonConvergent when the chords have equal length.
CenterEstimate LocateCenter(Point2 p0, Point2 p1, Point2 p2);

enum class CellDegeneracy { kNone, kCollinear, kReflex };

struct Cell {
  int i = 0;
  int j = 0;
  // A(i, j), A(i, j + 1), A(i + 1, j + 1), A(i + 1, j).
  std::array<Point2, 4> polygon;
  CellDegeneracy degeneracy = CellDegeneracy::kNone;
  int degenerate_vertex = -1;  // polygon index, or -1
};

struct CellSet {
  Point2 origin;
  Family family = Family::kQuadrangular;
  std::vector<Cell> cells;  // lexicographic in (i, j)
};

// Interior angles expected at the four polygon vertices of every cell of s,
// in polygon order.
std::array<Angle, 4> ExpectedCellAngles(const SpiralSystem& s);

// Interior angles of a cell measured from its coordinates, in [0, 2pi).
std::array<Angle, 4> MeasuredCellAngles(const Cell& cell);

// One cell per (i, j) whose four corners lie in the lattice.
CellSet BuildCells(const VertexLattice& lat, const SpiralSystem& s);

std::string_view ToString(CellDegeneracy degeneracy);

struct Rosette {
  VertexLattice lattice;
  CellSet cells;
};

// One full turn of a closed tiling: every cell (i, j) with i in [0, n) whose
// outer corner A(i, j) lies within r0 and whose inner corner A(i+1, j+1)
// lies within `rows` kappa steps of r0. Since A(i + n, j) = A(i, j + m),
// each tile of that annulus appears exactly once. Throws kInvalidArgument
// when rows < 1 or the annulus holds no cell.
Rosette BuildRosette(const SpiralSystem& s, double r0, Angle alpha0, int rows,
                     Point2 origin = {});

}  // namespace spiraltile

#endif  // SPIRALTILE_LATTICE_H_
