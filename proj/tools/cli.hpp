// Copyright 2026 The covker Authors.
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace covker::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kVerifyFailed = 2, kResourceLimit = 3 };

/// Runs one command line (without the program name). JSON goes to `out`,
/// including error objects; `err` only receives help text.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace covker::cli
