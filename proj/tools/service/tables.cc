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

#include "service/tables.h"

#include <cstdio>
#include <string>

#include "spiraltile/errors.h"
#include "spiraltile/record.h"

namespace spiraltile::service {
namespace {

std::string G12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

nlohmann::json Num(double v) { return RoundSignificant(v, 12); }

}  // namespace

const std::vector<FigureSpec>& ReferenceFigures() {
  static const std::vector<FigureSpec> kFigures = {
      {"2b", Family::kQuadrangular, RotationSense::kCo, 13, 1, 14.60, 0.484},
      {"2c", Family::kQuadrangular, RotationSense::kCo, 13, 2, 15.0, 0.486},
      {"2d", Family::kQuadrangular, RotationSense::kContra, 11, 1, 24.0,
       0.512},
      {"3a", Family::kTriangleOmegaPhi, RotationSense::kCo, 12, 2, 20.0, {}},
      {"3e", Family::kTriangleOmegaPhi, RotationSense::kContra, 5, 1, 21.0,
       {}},
      {"4a", Family::kTriangleOmegaZero, RotationSense::kCo, 10, 1, 20.0, {}},
      {"4d", Family::kTriangleOmegaPhi, RotationSense::kContra, 10, 9, 20.0,
       {}},
      {"5", Family::kQuadrangular, RotationSense::kContra, 8, 13, 20.0, 0.78},
  };
  return kFigures;
}

SpiralSystem BuildFigure(const FigureSpec& spec) {
  DesignRequest req;
  req.family = spec.family;
  req.n = spec.n;
  req.m = spec.m;
  req.phi = Angle::Degrees(spec.phi_deg);
  req.kappa = spec.kappa;
  req.sense = spec.sense;
  if (spec.family == Family::kQuadrangular) return DesignQuadrangular(req);
  return SelectSolution(SolveTriangular(req));
}

std::vector<Table3Row> Table3() {
  std::vector<Table3Row> rows;
  for (const FigureSpec& spec : ReferenceFigures()) {
    Table3Row row{spec, BuildFigure(spec), std::nullopt, ""};
    try {
      row.divergence = Divergence(row.system);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoDivergenceAngle) throw;
      row.note = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string Table3Csv(const std::vector<Table3Row>& rows) {
  std::string out =
      "figure,family,sense,n,m,phi_deg,theta_deg,kappa,lambda,i_lambda,"
      "i_kappa,d_deg,note\n";
  for (const Table3Row& r : rows) {
    const SpiralSystem& s = r.system;
    out += r.spec.figure + "," + std::string(ToString(s.family)) + "," +
           std::string(ToString(s.sense)) + "," + std::to_string(s.n) + "," +
           std::to_string(s.m) + "," + G12(s.phi.degrees()) + "," +
           G12(s.theta.degrees()) + "," + G12(s.kappa) + "," +
           G12(s.lambda) + ",";
    if (r.divergence) {
      out += std::to_string(r.divergence->i_lambda) + "," +
             std::to_string(r.divergence->i_kappa) + "," +
             G12(r.divergence->d.degrees()) + ",";
    } else {
      out += ",,,\"" + r.note + "\"";
    }
    out += "\n";
  }
  return out;
}

nlohmann::json Table3Json(const std::vector<Table3Row>& rows) {
  nlohmann::json list = nlohmann::json::array();
  for (const Table3Row& r : rows) {
    nlohmann::json j = {{"figure", r.spec.figure},
                        {"system", SystemToJson(r.system)}};
    if (r.divergence) {
      j["i_lambda"] = r.divergence->i_lambda;
      j["i_kappa"] = r.divergence->i_kappa;
      j["d_deg"] = Num(r.divergence->d.degrees());
    } else {
      j["i_lambda"] = nullptr;
      j["i_kappa"] = nullptr;
      j["d_deg"] = nullptr;
      j["note"] = r.note;
    }
    list.push_back(std::move(j));
  }
  return {{"status", "ok"}, {"rows", std::move(list)}};
}

std::string Table4Csv(const std::vector<PhiMaxCell>& cells) {
  std::string out = "m,n,phi_max_deg,kappa_at_tangency,note\n";
  for (const PhiMaxCell& c : cells) {
    out += std::to_string(c.m) + "," + std::to_string(c.n) + ",";
    if (c.result) {
      out += G12(c.result->phi_max.degrees()) + "," +
             G12(c.result->kappa_at_tangency) + ",";
    } else {
      out += ",,\"" + c.error + "\"";
    }
    out += "\n";
  }
  return out;
}

nlohmann::json Table4Json(const std::vector<PhiMaxCell>& cells) {
  nlohmann::json list = nlohmann::json::array();
  for (const PhiMaxCell& c : cells) {
    nlohmann::json j = {{"m", c.m}, {"n", c.n}};
    if (c.result) {
      j["phi_max_deg"] = Num(c.result->phi_max.degrees());
      j["kappa_at_tangency"] = Num(c.result->kappa_at_tangency);
    } else {
      j["phi_max_deg"] = nullptr;
      j["kappa_at_tangency"] = nullptr;
      j["note"] = c.error;
    }
    list.push_back(std::move(j));
  }
  return {{"status", "ok"}, {"cells", std::move(list)}};
}

IntRange ParseIntRange(const std::string& text, const std::string& field) {
  auto parse = [&](const std::string& part) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size() || v < 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  field + ": expected a positive integer or a range a..b, "
                          "got \"" + text + "\"");
    }
    return v;
  };
  const auto dots = text.find("..");
  IntRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse(text);
  } else {
    r.lo = parse(text.substr(0, dots));
    r.hi = parse(text.substr(dots + 2));
  }
  if (r.lo > r.hi) {
    throw Error(ErrorCode::kInvalidArgument, field + ": empty range");
  }
  return r;
}

}  // namespace spiraltile::service
