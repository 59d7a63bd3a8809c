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

#ifndef SPIRALTILE_RECORD_H_
#define SPIRALTILE_RECORD_H_

#include <nlohmann/json.hpp>

#include "spiraltile/model.h"

namespace spiraltile {

enum class NumberPrecision {
  kCanonical,  // 12 significant digits
  kRoundTrip,  // 17 significant digits, lossless
};

// Rounds v to the given number of significant decimal digits.
double RoundSignificant(double v, int digits);

// Canonical external record: n, m, phi_deg, theta_deg, kappa, lambda,
// sigma_deg, omega_deg, sense, family.
nlohmann::json SystemToJson(const SpiralSystem& s,
                            NumberPrecision precision =
                                NumberPrecision::kCanonical);

// Parses a record. Throws Error(kInvalidArgument) with a field-level message.
// The result is not validated; see ValidateSystem.
SpiralSystem SystemFromJson(const nlohmann::json& record);

}  // namespace spiraltile

#endif  // SPIRALTILE_RECORD_H_
