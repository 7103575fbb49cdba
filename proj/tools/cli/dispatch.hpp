// Copyright 2026 The parsub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PARSUB_TOOLS_CLI_DISPATCH_HPP_
#define PARSUB_TOOLS_CLI_DISPATCH_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace parsub::cli {

enum ExitStatus : int {
  kExitOk = 0,
  kExitFailRows = 1,
  kExitUsage = 2,
  kExitCapacity = 3,
};

// Runs one invocation. `args` excludes the program name. Reports go to
// `out`, diagnostics to `err`.
int Dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parsub::cli

#endif  // PARSUB_TOOLS_CLI_DISPATCH_HPP_
