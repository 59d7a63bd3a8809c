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

#ifndef SPIRALTILE_RENDER_H_
#define SPIRALTILE_RENDER_H_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spiraltile/lattice.h"

namespace spiraltile {

struct RenderStyle {
  double stroke_width = 1.0;  // in output pixels
  // Fill colours cycled by (i + j); empty selects DefaultPalette().
  std::vector<std::string> palette;
  double canvas_size = 800.0;  // width and height in pixels
};

// "#f2e3c6", "#c9dfc3", "#b7d0e6", "#ecc8c5".
std::vector<std::string> DefaultPalette();

// SVG 1.1 document with one path per cell in (i, j) order. The y axis is
// flipped so anticlockwise turns appear anticlockwise on the page, and the
// viewBox is a square centred on the spiral centre. Coordinates carry six
// decimals, so identical input yields identical bytes. Throws
// kDegenerateGeometry for an empty or zero-extent cell set and
// kInvalidArgument for unusable style values.
std::string RenderSvg(const CellSet& cells, const RenderStyle& style = {});

// Vertex listing with 12 significant digits.
nlohmann::json VertexSidecar(const VertexLattice& lat);

}  // namespace spiraltile

#endif  // SPIRALTILE_RENDER_H_
