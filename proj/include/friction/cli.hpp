// Copyright 2026 The Friction Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace friction {

enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 1,
  kExitRejected = 2,
  kExitInconsistent = 3,
};

/// Name of the environment variable that sets the default arithmetic
/// ("exact" or "float"). Command-line flags win over it.
inline constexpr const char* kModeEnvironmentVariable = "FRICTION_MODE";

/// Runs the command line `args` (without the program name) and returns the
/// process exit code. Reports go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace friction
