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

#include "spiraltile/record.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "spiraltile/errors.h"

namespace spiraltile {
namespace {

using nlohmann::json;

[[noreturn]] void FieldError(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, field + ": " + what);
}

const json& Field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) FieldError(key, "missing");
  return *it;
}

double Number(const json& j, const char* key) {
  const json& v = Field(j, key);
  if (!v.is_number()) FieldError(key, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) FieldError(key, "expected a finite number");
  return x;
}

int Integer(const json& j, const char* key) {
  const json& v = Field(j, key);
  if (!v.is_number_integer()) FieldError(key, "expected an integer");
  return v.get<int>();
}

std::string Text(const json& j, const char* key) {
  const json& v = Field(j, key);
  if (!v.is_string()) FieldError(key, "expected a string");
  return v.get<std::string>();
}

}  // namespace

double RoundSignificant(double v, int digits) {
  if (!std::isfinite(v) || v == 0.0) return v;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return std::strtod(buf, nullptr);
}

json SystemToJson(const SpiralSystem& s, NumberPrecision precision) {
  const int digits = precision == NumberPrecision::kCanonical ? 12 : 17;
  auto num = [digits](double v) { return RoundSignificant(v, digits); };
  json j;
  j["n"] = s.n;
  j["m"] = s.m;
  j["phi_deg"] = num(s.phi.degrees());
  j["theta_deg"] = num(s.theta.degrees());
  j["kappa"] = num(s.kappa);
  j["lambda"] = num(s.lambda);
  j["sigma_deg"] = num(s.sigma.degrees());
  j["omega_deg"] = num(s.omega.degrees());
  j["sense"] = std::string(ToString(s.sense));
  j["family"] = std::string(ToString(s.family));
  return j;
}

SpiralSystem SystemFromJson(const json& record) {
  if (!record.is_object()) FieldError("system", "expected an object");
  static constexpr const char* kKeys[] = {
      "n",      "m",         "phi_deg",   "theta_deg", "kappa",
      "lambda", "sigma_deg", "omega_deg", "sense",     "family"};
  for (const auto& [key, value] : record.items()) {
    bool known = false;
    for (const char* k : kKeys) known = known || key == k;
    if (!known) FieldError(key, "unknown field");
  }
  SpiralSystem s;
  s.n = Integer(record, "n");
  s.m = Integer(record, "m");
  s.phi = Angle::Degrees(Number(record, "phi_deg"));
  s.theta = Angle::Degrees(Number(record, "theta_deg"));
  s.kappa = Number(record, "kappa");
  s.lambda = Number(record, "lambda");
  s.sigma = Angle::Degrees(Number(record, "sigma_deg"));
  s.omega = Angle::Degrees(Number(record, "omega_deg"));
  s.sense = ParseRotationSense(Text(record, "sense"));
  s.family = ParseFamily(Text(record, "family"));
  return s;
}

}  // namespace spiraltile
