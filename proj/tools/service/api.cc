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

#include "service/api.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "spiraltile/equivalence.h"
#include "spiraltile/errors.h"
#include "spiraltile/lattice.h"
#include "spiraltile/phyllotaxis.h"
#include "spiraltile/record.h"
#include "spiraltile/relations.h"
#include "spiraltile/render.h"
#include "spiraltile/solver.h"

namespace spiraltile::service {
namespace {

using nlohmann::json;

constexpr int kMaxRings = 400;
constexpr double kRenderFade = 0.02;  // innermost ring radius / r0

[[noreturn]] void Bad(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, field + ": " + what);
}

json Num(double v) {
  if (!std::isfinite(v)) return nullptr;
  return RoundSignificant(v, 12);
}

json Optional(const std::optional<double>& v) {
  return v ? Num(*v) : json(nullptr);
}

void CheckObject(const json& req) {
  if (!req.is_object()) Bad("body", "expected a JSON object");
}

constexpr std::array<std::string_view, 7> kDesignKeys = {
    "family", "n", "m", "phi_deg", "kappa", "sense", "solution_index"};

void CheckKeys(const json& req, const std::vector<std::string_view>& allowed) {
  for (const auto& [key, value] : req.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      Bad(key, "unknown field");
    }
  }
}

std::vector<std::string_view> DesignKeysPlus(
    std::initializer_list<std::string_view> extra) {
  std::vector<std::string_view> keys(kDesignKeys.begin(), kDesignKeys.end());
  keys.insert(keys.end(), extra.begin(), extra.end());
  return keys;
}

int GetInt(const json& req, const char* key) {
  auto it = req.find(key);
  if (it == req.end()) Bad(key, "missing");
  if (!it->is_number_integer()) Bad(key, "expected an integer");
  const auto v = it->get<long long>();
  if (v < 1 || v > 1000000) Bad(key, "must be a positive integer");
  return static_cast<int>(v);
}

double GetNumber(const json& req, const char* key) {
  auto it = req.find(key);
  if (it == req.end()) Bad(key, "missing");
  if (!it->is_number()) Bad(key, "expected a number");
  const double v = it->get<double>();
  if (!std::isfinite(v)) Bad(key, "expected a finite number");
  return v;
}

std::optional<double> GetOptionalNumber(const json& req, const char* key) {
  auto it = req.find(key);
  if (it == req.end() || it->is_null()) return std::nullopt;
  return GetNumber(req, key);
}

std::string GetString(const json& req, const char* key) {
  auto it = req.find(key);
  if (it == req.end()) Bad(key, "missing");
  if (!it->is_string()) Bad(key, "expected a string");
  return it->get<std::string>();
}

DesignRequest ParseDesign(const json& req) {
  DesignRequest d;
  d.family = ParseFamily(GetString(req, "family"));
  d.n = GetInt(req, "n");
  d.m = GetInt(req, "m");
  d.phi = Angle::Degrees(GetNumber(req, "phi_deg"));
  d.kappa = GetOptionalNumber(req, "kappa");
  d.sense = ParseRotationSense(GetString(req, "sense"));
  if (auto it = req.find("solution_index"); it != req.end() && !it->is_null()) {
    if (!it->is_number_integer()) Bad("solution_index", "expected 0 or 1");
    d.solution_index = it->get<int>();
  }
  ValidateRequest(d);
  return d;
}

json RequestJson(const DesignRequest& d) {
  json j;
  j["family"] = std::string(ToString(d.family));
  j["n"] = d.n;
  j["m"] = d.m;
  j["phi_deg"] = Num(d.phi.degrees());
  if (d.kappa) j["kappa"] = Num(*d.kappa);
  j["sense"] = std::string(ToString(d.sense));
  if (d.solution_index) j["solution_index"] = *d.solution_index;
  return j;
}

json ReportJson(const FeasibilityReport& r) {
  json rules = json::array();
  for (const RuleCheck& c : r.rules) {
    rules.push_back({{"rule_id", c.rule_id},
                     {"inequality", c.inequality},
                     {"lhs", Num(c.lhs)},
                     {"rhs", Num(c.rhs)},
                     {"passed", c.passed},
                     {"applicable", c.applicable}});
  }
  return {{"theta_deg", Num(r.theta.degrees())},
          {"all_applicable_passed", r.AllApplicablePassed()},
          {"rules", std::move(rules)}};
}

json ReportOrNull(const DesignRequest& d) {
  try {
    return ReportJson(
        Feasibility(d.family, d.n, d.m, d.phi, d.sense, d.kappa));
  } catch (const Error&) {
    return nullptr;
  }
}

json SensesJson(const SpiralSystem& s) {
  const BranchSenses b = BranchSensesFor(s.sigma, s.omega, s.phi, s.theta);
  return {{"bkappa", std::string(ToString(b.bkappa))},
          {"blambda", std::string(ToString(b.blambda))},
          {"combined", b.combined ? json(std::string(ToString(*b.combined)))
                                  : json("non-closed")}};
}

json ErrorJson(const Error& e) {
  json j = {{"code", std::string(ErrorCodeName(e.code()))},
            {"message", e.what()}};
  if (e.code() == ErrorCode::kNoDivergenceAngle) j["rule"] = "R13";
  if (e.code() == ErrorCode::kInvalidArgument) {
    const std::string msg = e.what();
    const auto colon = msg.find(':');
    if (colon != std::string::npos && colon < 40) {
      j["field"] = msg.substr(0, colon);
    }
  }
  return j;
}

Response Infeasible(const Error& e, json extra = json::object()) {
  Response r;
  r.outcome = Outcome::kInfeasible;
  r.body = {{"status", "infeasible"}, {"error", ErrorJson(e)}};
  for (auto& [k, v] : extra.items()) r.body[k] = v;
  return r;
}

Response Ok(json body) {
  Response r;
  r.outcome = Outcome::kOk;
  json out = {{"status", "ok"}};
  for (auto& [k, v] : body.items()) out[k] = v;
  r.body = std::move(out);
  return r;
}

json SolutionsJson(const SolveReport& rep) {
  json list = json::array();
  for (const Solution& s : rep.solutions) {
    list.push_back({{"kappa", Num(s.kappa)},
                    {"lambda", Num(s.lambda)},
                    {"sigma_deg", Num(s.sigma.degrees())},
                    {"omega_deg", Num(s.omega.degrees())},
                    {"bracket", {Num(s.bracket_lo), Num(s.bracket_hi)}},
                    {"system", SystemToJson(s.system)}});
  }
  return list;
}

// Resolves a request to one system: an explicit "system" record, a
// quadrangular design, or one root of a triangular solve.
SpiralSystem ResolveSystem(const json& req) {
  if (auto it = req.find("system"); it != req.end()) {
    for (std::string_view k : kDesignKeys) {
      if (req.contains(k)) {
        Bad(std::string(k), "not allowed together with \"system\"");
      }
    }
    SpiralSystem s = SystemFromJson(*it);
    const FeasibilityVerdict v = ValidateSystem(s);
    if (!v.ok()) {
      Bad("system", "violates " + v.violations.front().invariant +
                        " (residual " +
                        std::to_string(v.violations.front().residual) + ")");
    }
    return s;
  }
  const DesignRequest d = ParseDesign(req);
  if (d.family == Family::kQuadrangular) return DesignQuadrangular(d);
  return SelectSolution(SolveTriangular(d));
}

Response HandleDesign(const json& req) {
  CheckKeys(req, DesignKeysPlus({}));
  const DesignRequest d = ParseDesign(req);
  try {
    json body;
    SpiralSystem s;
    if (d.family == Family::kQuadrangular) {
      s = DesignQuadrangular(d);
    } else {
      const SolveReport rep = SolveTriangular(d);
      s = SelectSolution(rep);
      body["solution_count"] = rep.solutions.size();
      body["solution_index"] =
          d.solution_index ? *d.solution_index
                           : static_cast<int>(rep.solutions.size()) - 1;
    }
    body["system"] = SystemToJson(s);
    body["branch_senses"] = SensesJson(s);
    body["feasibility"] = ReportOrNull(d);
    return Ok(std::move(body));
  } catch (const Error& e) {
    if (!IsDomainOutcome(e.code())) throw;
    return Infeasible(e, {{"request", RequestJson(d)},
                          {"feasibility", ReportOrNull(d)}});
  }
}

Response HandleSolve(const json& req) {
  CheckKeys(req, DesignKeysPlus({}));
  const DesignRequest d = ParseDesign(req);
  if (!IsTriangular(d.family)) {
    Bad("family", "solve needs \"tri-omega-phi\" or \"tri-omega-zero\"");
  }
  try {
    const SolveReport rep = SolveTriangular(d);
    json body = {
        {"request", RequestJson(d)},
        {"theta_deg", Num(rep.theta.degrees())},
        {"diagnostics",
         {{"a", Optional(rep.diagnostics.a)},
          {"i", Optional(rep.diagnostics.i)},
          {"h", Optional(rep.diagnostics.h)},
          {"reciprocal", rep.diagnostics.reciprocal}}},
        {"feasibility", ReportJson(rep.feasibility)},
        {"solution_count", rep.solutions.size()},
        {"solutions", SolutionsJson(rep)},
        {"tangent", rep.tangent},
        {"zero_root_excluded", rep.zero_root_excluded}};
    if (rep.solutions.empty()) {
      return Infeasible(Error(ErrorCode::kNoSolution,
                              "no root of the shape and power curves"),
                        std::move(body));
    }
    return Ok(std::move(body));
  } catch (const Error& e) {
    if (!IsDomainOutcome(e.code())) throw;
    return Infeasible(e, {{"request", RequestJson(d)},
                          {"feasibility", ReportOrNull(d)},
                          {"solution_count", 0},
                          {"solutions", json::array()}});
  }
}

Response HandleFeasibility(const json& req) {
  CheckKeys(req, {"family", "n", "m", "phi_deg", "kappa", "sense"});
  DesignRequest d;
  d.family = ParseFamily(GetString(req, "family"));
  d.n = GetInt(req, "n");
  d.m = GetInt(req, "m");
  d.phi = Angle::Degrees(GetNumber(req, "phi_deg"));
  d.kappa = GetOptionalNumber(req, "kappa");
  d.sense = ParseRotationSense(GetString(req, "sense"));
  if (d.kappa && !(*d.kappa > 0.0 && *d.kappa < 1.0)) {
    Bad("kappa", "must lie in (0, 1)");
  }
  if (!(d.phi.radians() > 0.0 && d.phi.radians() < kPi)) {
    Bad("phi_deg", "must lie in (0, 180)");
  }
  try {
    const FeasibilityReport rep =
        Feasibility(d.family, d.n, d.m, d.phi, d.sense, d.kappa);
    json body = {{"request", RequestJson(d)}, {"feasibility", ReportJson(rep)}};
    if (!rep.AllApplicablePassed()) {
      return Infeasible(
          Error(ErrorCode::kNoSolution, "an applicable rule fails"),
          std::move(body));
    }
    return Ok(std::move(body));
  } catch (const Error& e) {
    if (!IsDomainOutcome(e.code())) throw;
    return Infeasible(e, {{"request", RequestJson(d)}});
  }
}

Response HandlePhiMax(const json& req) {
  CheckKeys(req, {"n", "m"});
  const int n = GetInt(req, "n");
  const int m = GetInt(req, "m");
  if (n < 3) Bad("n", "phimax needs n >= 3");
  try {
    const PhiMaxResult r = PhiMax(n, m);
    return Ok({{"n", n},
               {"m", m},
               {"phi_max_deg", Num(r.phi_max.degrees())},
               {"kappa_at_tangency", Num(r.kappa_at_tangency)}});
  } catch (const Error& e) {
    if (!IsDomainOutcome(e.code())) throw;
    return Infeasible(e, {{"n", n}, {"m", m}});
  }
}

Response HandleEquivalent(const json& req) {
  CheckKeys(req, DesignKeysPlus({"system"}));
  try {
    const SpiralSystem s = ResolveSystem(req);
    const EquivalenceResult r = ToOmegaPhiEquivalent(s);
    return Ok({{"case_id", r.case_id},
               {"original", SystemToJson(r.original)},
               {"equivalent", SystemToJson(r.equivalent)},
               {"lambda_bar", Num(r.equivalent.lambda)},
               {"theta_bar_deg", Num(r.equivalent.theta.degrees())},
               {"m_bar", r.equivalent.m},
               {"sense_bar", std::string(ToString(r.equivalent.sense))},
               {"omega_bar_deg", Num(r.omega_bar.degrees())},
               {"omega_bar_equals_phi", r.omega_bar_equals_phi}});
  } catch (const Error& e) {
    if (!IsDomainOutcome(e.code())) throw;
    return Infeasible(e);
  }
}

Response HandleDivergence(const json& req) {
  CheckKeys(req, DesignKeysPlus({"system"}));
  SpiralSystem s;
  try {
    s = ResolveSystem(req);
  } catch (const Error& e) {
    if (!IsDomainOutcome(e.code())) throw;
    return Infeasible(e);
  }
  try {
    const DivergenceResult r = Divergence(s);
    return Ok({{"system", SystemToJson(s)},
               {"i_kappa", r.i_kappa},
               {"i_lambda", r.i_lambda},
               {"d_deg", Num(r.d.degrees())},
               {"i_kappa_prime", r.i_kappa_prime},
               {"i_lambda_prime", r.i_lambda_prime},
               {"d_prime_deg", Num(r.d_prime.degrees())},
               {"r", Num(r.r)},
               {"R", Num(r.big_r)}});
  } catch (const Error& e) {
    if (!IsDomainOutcome(e.code())) throw;
    return Infeasible(e, {{"system", SystemToJson(s)}});
  }
}

RenderStyle ParseStyle(const json& req) {
  RenderStyle style;
  auto it = req.find("style");
  if (it == req.end() || it->is_null()) return style;
  if (!it->is_object()) Bad("style", "expected an object");
  CheckKeys(*it, {"stroke_width", "palette", "canvas_size"});
  if (auto w = GetOptionalNumber(*it, "stroke_width")) style.stroke_width = *w;
  if (auto c = GetOptionalNumber(*it, "canvas_size")) style.canvas_size = *c;
  if (auto p = it->find("palette"); p != it->end() && !p->is_null()) {
    if (!p->is_array()) Bad("style.palette", "expected an array of strings");
    for (const json& c : *p) {
      if (!c.is_string()) Bad("style.palette", "expected strings");
      style.palette.push_back(c.get<std::string>());
    }
  }
  return style;
}

Response HandleRender(const json& req) {
  CheckKeys(req,
            DesignKeysPlus({"system", "r0", "alpha0_deg", "rings", "style"}));
  const RenderStyle style = ParseStyle(req);
  const double r0 = GetOptionalNumber(req, "r0").value_or(1.0);
  if (!(r0 > 0.0)) Bad("r0", "must be positive");
  const Angle alpha0 =
      Angle::Degrees(GetOptionalNumber(req, "alpha0_deg").value_or(0.0));
  std::optional<int> rings;
  if (req.contains("rings")) {
    rings = GetInt(req, "rings");
    if (*rings > kMaxRings) Bad("rings", "at most 400");
  }
  SpiralSystem s;
  try {
    s = ResolveSystem(req);
  } catch (const Error& e) {
    if (!IsDomainOutcome(e.code())) throw;
    return Infeasible(e);
  }
  const int rows = rings.value_or(std::clamp(
      static_cast<int>(std::ceil(std::log(kRenderFade) / std::log(s.kappa))),
      s.m, kMaxRings));
  const Rosette rosette = BuildRosette(s, r0, alpha0, rows);
  Response r;
  r.outcome = Outcome::kOk;
  r.svg = RenderSvg(rosette.cells, style);
  r.sidecar = VertexSidecar(rosette.lattice);
  return r;
}

}  // namespace

std::optional<Endpoint> ParseEndpoint(std::string_view name) {
  if (name == "design") return Endpoint::kDesign;
  if (name == "solve") return Endpoint::kSolve;
  if (name == "feasibility") return Endpoint::kFeasibility;
  if (name == "phimax") return Endpoint::kPhiMax;
  if (name == "equivalent") return Endpoint::kEquivalent;
  if (name == "divergence") return Endpoint::kDivergence;
  if (name == "render") return Endpoint::kRender;
  return std::nullopt;
}

int Response::http_status() const {
  switch (outcome) {
    case Outcome::kOk:
    case Outcome::kInfeasible:
      return 200;
    case Outcome::kBadRequest:
      return 400;
    case Outcome::kInternalError:
      return 500;
  }
  return 500;
}

int Response::exit_code() const {
  switch (outcome) {
    case Outcome::kOk:
      return 0;
    case Outcome::kInfeasible:
      return 2;
    default:
      return 1;
  }
}

std::string Response::content_type() const {
  return is_svg() ? "image/svg+xml" : "application/json";
}

std::string Response::Text() const { return is_svg() ? svg : Dump(body); }

std::string Dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

Response Handle(Endpoint endpoint, const nlohmann::json& request) {
  Response r;
  try {
    CheckObject(request);
    switch (endpoint) {
      case Endpoint::kDesign:
        return HandleDesign(request);
      case Endpoint::kSolve:
        return HandleSolve(request);
      case Endpoint::kFeasibility:
        return HandleFeasibility(request);
      case Endpoint::kPhiMax:
        return HandlePhiMax(request);
      case Endpoint::kEquivalent:
        return HandleEquivalent(request);
      case Endpoint::kDivergence:
        return HandleDivergence(request);
      case Endpoint::kRender:
        return HandleRender(request);
    }
    throw Error(ErrorCode::kInternalInconsistency, "unknown endpoint");
  } catch (const Error& e) {
    if (IsDomainOutcome(e.code())) return Infeasible(e);
    r.outcome = e.code() == ErrorCode::kInvalidArgument
                    ? Outcome::kBadRequest
                    : Outcome::kInternalError;
    r.body = {{"status", "error"}, {"error", ErrorJson(e)}};
  } catch (const nlohmann::json::exception& e) {
    r.outcome = Outcome::kBadRequest;
    r.body = {{"status", "error"},
              {"error", {{"code", "InvalidArgument"}, {"message", e.what()}}}};
  } catch (const std::exception& e) {
    r.outcome = Outcome::kInternalError;
    r.body = {{"status", "error"},
              {"error",
               {{"code", "InternalInconsistency"}, {"message", e.what()}}}};
  }
  return r;
}

}  // namespace spiraltile::service
