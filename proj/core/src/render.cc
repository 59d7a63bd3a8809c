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

#include "spiraltile/render.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <string>

#include "spiraltile/errors.h"
#include "spiraltile/record.h"

namespace spiraltile {
namespace {

std::string Fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

bool SafeColour(const std::string& c) {
  if (c.empty() || c.size() > 64) return false;
  return std::all_of(c.begin(), c.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '#' ||
           ch == '(' || ch == ')' || ch == ',' || ch == '.' || ch == '%' ||
           ch == ' ';
  });
}

}  // namespace

std::vector<std::string> DefaultPalette() {
  return {"#f2e3c6", "#c9dfc3", "#b7d0e6", "#ecc8c5"};
}

std::string RenderSvg(const CellSet& cells, const RenderStyle& style) {
  if (cells.cells.empty()) {
    throw Error(ErrorCode::kDegenerateGeometry, "no cells to render");
  }
  if (!(style.canvas_size > 0.0) || !std::isfinite(style.canvas_size)) {
    throw Error(ErrorCode::kInvalidArgument, "canvas_size: must be positive");
  }
  if (!(style.stroke_width >= 0.0) || !std::isfinite(style.stroke_width)) {
    throw Error(ErrorCode::kInvalidArgument,
                "stroke_width: must be non-negative");
  }
  const std::vector<std::string> palette =
      style.palette.empty() ? DefaultPalette() : style.palette;
  for (const std::string& c : palette) {
    if (!SafeColour(c)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "palette: unsupported colour \"" + c + "\"");
    }
  }

  const Point2 s = cells.origin;
  double extent = 0.0;
  for (const Cell& c : cells.cells) {
    for (const Point2& p : c.polygon) {
      extent = std::max({extent, std::abs(p.x - s.x), std::abs(p.y - s.y)});
    }
  }
  if (!(extent > 0.0) || !std::isfinite(extent)) {
    throw Error(ErrorCode::kDegenerateGeometry, "canvas has zero extent");
  }
  extent *= 1.02;
  const double side = 2.0 * extent;
  const double stroke = style.stroke_width * side / style.canvas_size;
  const int colours = static_cast<int>(palette.size());

  std::string out;
  out.reserve(cells.cells.size() * 160 + 512);
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         Fixed6(style.canvas_size) + "\" height=\"" +
         Fixed6(style.canvas_size) + "\" viewBox=\"" + Fixed6(s.x - extent) +
         " " + Fixed6(-s.y - extent) + " " + Fixed6(side) + " " +
         Fixed6(side) + "\">\n";
  out += "<g stroke=\"#1f1f1f\" stroke-width=\"" + Fixed6(stroke) +
         "\" stroke-linejoin=\"round\">\n";
  for (const Cell& c : cells.cells) {
    const int k = ((c.i + c.j) % colours + colours) % colours;
    out += "<path id=\"c" + std::to_string(c.i) + "_" + std::to_string(c.j) +
           "\" d=\"";
    for (int v = 0; v < 4; ++v) {
      out += v == 0 ? "M" : " L";
      out += Fixed6(c.polygon[v].x) + " " + Fixed6(-c.polygon[v].y);
    }
    out += " Z\" fill=\"" + palette[k] + "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

nlohmann::json VertexSidecar(const VertexLattice& lat) {
  auto num = [](double v) { return RoundSignificant(v, 12); };
  nlohmann::json j;
  j["origin"] = {num(lat.origin().x), num(lat.origin().y)};
  j["r0"] = num(lat.r0());
  j["alpha0_deg"] = num(lat.alpha0().degrees());
  j["s_lambda"] = lat.s_lambda();
  j["s_kappa"] = lat.s_kappa();
  j["i_range"] = {lat.i_range().lo, lat.i_range().hi};
  j["j_range"] = {lat.j_range().lo, lat.j_range().hi};
  nlohmann::json vertices = nlohmann::json::array();
  for (int i = lat.i_range().lo; i <= lat.i_range().hi; ++i) {
    for (int jj = lat.j_range().lo; jj <= lat.j_range().hi; ++jj) {
      const Point2 p = lat.Cartesian(i, jj);
      const PolarPoint& q = lat.Polar(i, jj);
      vertices.push_back({{"i", i},
                          {"j", jj},
                          {"x", num(p.x)},
                          {"y", num(p.y)},
                          {"radius", num(q.radius)},
                          {"angle_deg", num(q.angle * 180.0 / kPi)}});
    }
  }
  j["vertices"] = std::move(vertices);
  if (!lat.warnings().empty()) j["warnings"] = lat.warnings();
  return j;
}

}  // namespace spiraltile
