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

// Request handlers shared by the command line and the HTTP service. Both
// front ends build the same JSON request and print the same JSON response.

#ifndef SPIRALTILE_TOOLS_SERVICE_API_H_
#define SPIRALTILE_TOOLS_SERVICE_API_H_

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace spiraltile::service {

enum class Outcome {
  kOk,
  kInfeasible,  // a domain verdict, reported with its evidence
  kBadRequest,
  kInternalError,
};

enum class Endpoint {
  kDesign,
  kSolve,
  kFeasibility,
  kPhiMax,
  kEquivalent,
  kDivergence,
  kRender,
};

std::optional<Endpoint> ParseEndpoint(std::string_view name);

struct Response {
  Outcome outcome = Outcome::kOk;
  nlohmann::json body;
  std::string svg;  // set only by a successful render
  nlohmann::json sidecar;  // vertex listing of a successful render

  bool is_svg() const { return !svg.empty(); }
  int http_status() const;
  int exit_code() const;
  std::string content_type() const;
  // Document bytes as written to stdout or an HTTP body.
  std::string Text() const;
};

// Never throws.
Response Handle(Endpoint endpoint, const nlohmann::json& request);

// Pretty-printed JSON followed by a newline.
std::string Dump(const nlohmann::json& j);

}  // namespace spiraltile::service

#endif  // SPIRALTILE_TOOLS_SERVICE_API_H_
