/*
 * Copyright 2026 The Coalition Former Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef COALITION_CLI_HPP
#define COALITION_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace coalition {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitValidation = 2,
    kExitLimit = 3,
    kExitIo = 4,
};

/// Runs the command line (without the program name) and returns the exit
/// code. Results go to `out`, diagnostics to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace coalition

#endif // COALITION_CLI_HPP
