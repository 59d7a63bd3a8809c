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

#ifndef SPIRALTILE_TOOLS_SERVICE_CLI_H_
#define SPIRALTILE_TOOLS_SERVICE_CLI_H_

#include <ostream>

namespace spiraltile::service {

// Runs the spiraltile command line. Returns the process exit code:
// 0 success, 2 infeasible design, 1 usage or internal error.
int RunCli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace spiraltile::service

#endif  // SPIRALTILE_TOOLS_SERVICE_CLI_H_
