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

#ifndef SPIRALTILE_TOOLS_SERVICE_TABLES_H_
#define SPIRALTILE_TOOLS_SERVICE_TABLES_H_

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spiraltile/model.h"
#include "spiraltile/phyllotaxis.h"
#include "spiraltile/solver.h"

namespace spiraltile::service {

// Parameters of one reference figure.
struct FigureSpec {
  std::string figure;
  Family family;
  RotationSense sense;
  int n;
  int m;
  double phi_deg;
  std::optional<double> kappa;  // quadrangular figures only
};

// The eight reference figures, in table order.
const std::vector<FigureSpec>& ReferenceFigures();

// Builds the system for a figure: direct design for quadrangular figures,
// the largest-kappa root otherwise.
SpiralSystem BuildFigure(const FigureSpec& spec);

struct Table3Row {
  FigureSpec spec;
  SpiralSystem system;
  std::optional<DivergenceResult> divergence;
  std::string note;  // why divergence is absent
};

std::vector<Table3Row> Table3();
std::string Table3Csv(const std::vector<Table3Row>& rows);
nlohmann::json Table3Json(const std::vector<Table3Row>& rows);

std::string Table4Csv(const std::vector<PhiMaxCell>& cells);
nlohmann::json Table4Json(const std::vector<PhiMaxCell>& cells);

struct IntRange {
  int lo = 0;
  int hi = 0;
};

// Accepts "a..b" or a single integer. Throws Error(kInvalidArgument).
IntRange ParseIntRange(const std::string& text, const std::string& field);

}  // namespace spiraltile::service

#endif  // SPIRALTILE_TOOLS_SERVICE_TABLES_H_
