// Copyright 2026 The korth Authors
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

#ifndef KORTH_CLI_H
#define KORTH_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace korth {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
    kExitPass = 0,
    /// A check ran to completion and failed, or a search could not certify
    /// its space.
    kExitFail = 1,
    /// Bad flags, unreadable or malformed input.
    kExitUsage = 2,
};

/// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace korth

#endif
