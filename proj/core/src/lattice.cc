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

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "spiraltile/errors.h"
#include "spiraltile/relations.h"

namespace spiraltile {
namespace {

// exp() stays normal and finite well inside these bounds.
constexpr double kMinLogRadius = -700.0;
constexpr double kMaxLogRadius = 700.0;
constexpr double kGeometryTolerance = 1e-12;

int SignOf(BranchRotation rotation) {
  if (rotation == BranchRotation::kNonConvergent) {
    throw Error(ErrorCode::kNonConvergent,
                "branch does not converge to the centre");
  }
  return rotation == BranchRotation::kAnticlockwise ? 1 : -1;
}

double Cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double Dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
Point2 Sub(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }

}  // namespace

VertexLattice::VertexLattice(Point2 origin, double r0, Angle alpha0,
                             int s_lambda, int s_kappa, IndexRange i_range,
                             IndexRange j_range,
                             std::vector<PolarPoint> vertices,
                             std::vector<std::string> warnings)
    : origin_(origin),
      r0_(r0),
      alpha0_(alpha0),
      s_lambda_(s_lambda),
      s_kappa_(s_kappa),
      i_range_(i_range),
      j_range_(j_range),
      vertices_(std::move(vertices)),
      warnings_(std::move(warnings)) {}

bool VertexLattice::Contains(int i, int j) const {
  return i >= i_range_.lo && i <= i_range_.hi && j >= j_range_.lo &&
         j <= j_range_.hi;
}

const PolarPoint& VertexLattice::Polar(int i, int j) const {
  return vertices_[static_cast<size_t>(i - i_range_.lo) * j_range_.size() +
                   (j - j_range_.lo)];
}

Point2 VertexLattice::Cartesian(int i, int j) const {
  const PolarPoint& p = Polar(i, j);
  return {origin_.x + p.radius * std::cos(p.angle),
          origin_.y + p.radius * std::sin(p.angle)};
}

VertexLattice GenerateLattice(const SpiralSystem& s, double r0, Angle alpha0,
                              IndexRange i_range, IndexRange j_range,
                              Point2 origin) {
  if (!(r0 > 0.0) || !std::isfinite(r0)) {
    throw Error(ErrorCode::kInvalidArgument, "r0: must be positive");
  }
  if (i_range.size() < 1 || j_range.size() < 1) {
    throw Error(ErrorCode::kInvalidArgument, "index ranges must be non-empty");
  }
  if (s.n < 1 || s.m < 1 || !(s.kappa > 0.0 && s.kappa < 1.0) ||
      !(s.lambda > 0.0 && s.lambda < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "system needs n, m >= 1 and kappa, lambda in (0, 1)");
  }
  const BranchSenses b = BranchSensesFor(s.sigma, s.omega, s.phi, s.theta);
  const int s_kappa = SignOf(b.bkappa);
  const int s_lambda = SignOf(b.blambda);

  const double log_r0 = std::log(r0);
  const double log_lambda = std::log(s.lambda);
  const double log_kappa = std::log(s.kappa);
  auto log_radius = [&](int i, int j) {
    return log_r0 + i * log_lambda + j * log_kappa;
  };

  std::vector<std::string> warnings;
  const IndexRange requested_i = i_range;
  const IndexRange requested_j = j_range;
  while (log_radius(i_range.hi, j_range.hi) < kMinLogRadius) {
    if (j_range.hi > j_range.lo) {
      --j_range.hi;
    } else if (i_range.hi > i_range.lo) {
      --i_range.hi;
    } else {
      throw Error(ErrorCode::kInvalidArgument, "lattice radius underflows");
    }
  }
  while (log_radius(i_range.lo, j_range.lo) > kMaxLogRadius) {
    if (j_range.lo < j_range.hi) {
      ++j_range.lo;
    } else if (i_range.lo < i_range.hi) {
      ++i_range.lo;
    } else {
      throw Error(ErrorCode::kInvalidArgument, "lattice radius overflows");
    }
  }
  if (i_range.lo != requested_i.lo || i_range.hi != requested_i.hi ||
      j_range.lo != requested_j.lo || j_range.hi != requested_j.hi) {
    warnings.push_back("index range clipped to i in [" +
                       std::to_string(i_range.lo) + ", " +
                       std::to_string(i_range.hi) + "], j in [" +
                       std::to_string(j_range.lo) + ", " +
                       std::to_string(j_range.hi) +
                       "] to keep radii representable");
  }

  std::vector<PolarPoint> vertices;
  vertices.reserve(static_cast<size_t>(i_range.size()) * j_range.size());
  const double theta = s.theta.radians();
  const double phi = s.phi.radians();
  for (int i = i_range.lo; i <= i_range.hi; ++i) {
    for (int j = j_range.lo; j <= j_range.hi; ++j) {
      vertices.push_back(
          {std::exp(log_radius(i, j)),
           alpha0.radians() + s_lambda * i * theta + s_kappa * j * phi});
    }
  }
  return VertexLattice(origin, r0, alpha0, s_lambda, s_kappa, i_range,
                       j_range, std::move(vertices), std::move(warnings));
}

double VerifyClosure(const VertexLattice& lat, const SpiralSystem& s) {
  const IndexRange ir = lat.i_range();
  const IndexRange jr = lat.j_range();
  double worst = -1.0;
  for (int i = ir.lo; i + s.n <= ir.hi; ++i) {
    for (int j = jr.lo; j + s.m <= jr.hi; ++j) {
      const Point2 a = lat.Cartesian(i + s.n, j);
      const Point2 b = lat.Cartesian(i, j + s.m);
      const double radius = lat.Polar(i, j + s.m).radius;
      worst = std::max(worst, std::hypot(a.x - b.x, a.y - b.y) / radius);
    }
  }
  if (worst < 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "lattice must span at least n steps in i and m steps in j");
  }
  return worst;
}

CenterEstimate LocateCenter(Point2 p0, Point2 p1, Point2 p2) {
  using C = std::complex<double>;
  const C z0(p0.x, p0.y), z1(p1.x, p1.y), z2(p2.x, p2.y);
  const C c1 = z1 - z0;
  const C c2 = z2 - z1;
  if (std::abs(c1) == 0.0 || std::abs(c2) == 0.0) {
    throw Error(ErrorCode::kDegenerateGeometry, "zero-length chord");
  }
  const C q = c2 / c1;  // spiral similarity: rotation by phi, scale kappa
  const double kappa = std::abs(q);
  if (std::abs(q.imag()) <= kGeometryTolerance * kappa) {
    throw Error(ErrorCode::kDegenerateGeometry, "collinear points");
  }
  if (std::abs(kappa - 1.0) <= kGeometryTolerance) {
    throw Error(ErrorCode::kNonConvergent,
                "equal chords: the branch does not converge");
  }
  const C center = (z1 - q * z0) / (1.0 - q);
  CenterEstimate e;
  e.center = {center.real(), center.imag()};
  e.kappa = kappa;
  e.phi = Angle::Radians(std::abs(std::arg(q)));
  e.sigma = SigmaFrom(kappa, e.phi);
  return e;
}

std::array<Angle, 4> ExpectedCellAngles(const SpiralSystem& s) {
  const InteriorAngles a = InteriorAnglesFor(s.omega, s.phi, s.theta);
  if (s.sense == RotationSense::kCo) return {a.a00, a.a01, a.a11, a.a10};
  // The reference labelling runs lambda outward for contra-rotating
  // systems, which mirrors the cell along the lambda direction.
  return {a.a10, a.a11, a.a01, a.a00};
}

std::array<Angle, 4> MeasuredCellAngles(const Cell& cell) {
  const auto& p = cell.polygon;
  double area2 = 0.0;
  for (int k = 0; k < 4; ++k) area2 += Cross(p[k], p[(k + 1) % 4]);
  std::array<Angle, 4> out;
  for (int k = 0; k < 4; ++k) {
    const Point2 u = Sub(p[(k + 1) % 4], p[k]);
    const Point2 v = Sub(p[(k + 3) % 4], p[k]);
    const double turn = area2 >= 0.0 ? std::atan2(Cross(u, v), Dot(u, v))
                                     : std::atan2(Cross(v, u), Dot(u, v));
    out[k] = Angle::Radians(WrapTwoPi(turn));
  }
  return out;
}

CellSet BuildCells(const VertexLattice& lat, const SpiralSystem& s) {
  CellSet set;
  set.origin = lat.origin();
  set.family = s.family;
  const IndexRange ir = lat.i_range();
  const IndexRange jr = lat.j_range();

  std::vector<Point2> xy;
  xy.reserve(static_cast<size_t>(ir.size()) * jr.size());
  for (int i = ir.lo; i <= ir.hi; ++i) {
    for (int j = jr.lo; j <= jr.hi; ++j) xy.push_back(lat.Cartesian(i, j));
  }
  auto at = [&](int i, int j) {
    return xy[static_cast<size_t>(i - ir.lo) * jr.size() + (j - jr.lo)];
  };

  CellDegeneracy degeneracy = CellDegeneracy::kNone;
  if (s.family == Family::kTriangleOmegaPhi) {
    degeneracy = CellDegeneracy::kCollinear;
  } else if (s.family == Family::kTriangleOmegaZero) {
    degeneracy = CellDegeneracy::kReflex;
  }
  const int degenerate_vertex =
      degeneracy == CellDegeneracy::kNone
          ? -1
          : (s.sense == RotationSense::kCo ? 1 : 2);

  for (int i = ir.lo; i < ir.hi; ++i) {
    for (int j = jr.lo; j < jr.hi; ++j) {
      Cell c;
      c.i = i;
      c.j = j;
      c.polygon = {at(i, j), at(i, j + 1), at(i + 1, j + 1), at(i + 1, j)};
      c.degeneracy = degeneracy;
      c.degenerate_vertex = degenerate_vertex;
      set.cells.push_back(c);
    }
  }
  return set;
}

namespace {

int FloorDiv(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return static_cast<int>(q);
}

}  // namespace

Rosette BuildRosette(const SpiralSystem& s, double r0, Angle alpha0, int rows,
                     Point2 origin) {
  if (rows < 1) {
    throw Error(ErrorCode::kInvalidArgument, "rings: must be at least 1");
  }
  const long long n = s.n;
  const long long m = s.m;
  // In units of log(kappa): log r(i, j) = i*m/n + j, so the annulus test is
  // exact in integers.
  auto keep = [&](int i, int j) {
    return i * m + j * n >= 0 && (i + 1) * m + (j + 1) * n <= rows * n;
  };
  const int j_lo = -FloorDiv((n - 1) * m, n);
  const int j_hi = std::max(FloorDiv(rows * n - m - n, n), j_lo);
  VertexLattice lat =
      GenerateLattice(s, r0, alpha0, {0, s.n}, {j_lo, j_hi + 1}, origin);
  CellSet all = BuildCells(lat, s);
  CellSet cells;
  cells.origin = all.origin;
  cells.family = all.family;
  for (const Cell& c : all.cells) {
    if (c.i < s.n && keep(c.i, c.j)) cells.cells.push_back(c);
  }
  if (cells.cells.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "rings: too few rows to hold a complete cell");
  }
  return {std::move(lat), std::move(cells)};
}

std::string_view ToString(CellDegeneracy degeneracy) {
  switch (degeneracy) {
    case CellDegeneracy::kNone:
      return "none";
    case CellDegeneracy::kCollinear:
      return "collinear";
    case CellDegeneracy::kReflex:
      return "reflex";
  }
  return "none";
}

}  // namespace spiraltile
