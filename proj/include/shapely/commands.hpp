// Copyright 2026 The Shapely Authors
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


// The batch commands behind the command line tool. A request is a JSON
// object of options; the answer is a JSON document and an exit status
// (0 success, 1 domain error, 2 usage error).

#pragma once

#include <string>

#include "shapely/export.hpp"
#include "shapely/workspace.hpp"

namespace shapely {

struct CommandResult {
  int exit_code = 0;
  Json output;
};

/// Names accepted by run_command.
const std::vector<std::string>& command_names();

/// Runs one command. Files listed under "input" are read into a copy of ws
/// first. Errors are reported in the output under "error" with their code.
CommandResult run_command(const std::string& command, const Json& request,
                          const Workspace& ws = Workspace{});

/// Two-space indented text with a trailing newline.
std::string render(const Json& j);

}  // namespace shapely
