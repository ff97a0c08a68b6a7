/* Copyright 2026 The modarith Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef MODARITH_CLI_HPP
#define MODARITH_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace modarith {

enum ExitCode : int {
  kExitOk = 0,
  kExitFail = 1,        // check failed or countermodel found
  kExitInputError = 2,  // parse, sort or usage error
  kExitUndecided = 3,   // fuel or step budget exhausted
};

// Runs one invocation. args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modarith

#endif  // MODARITH_CLI_HPP
