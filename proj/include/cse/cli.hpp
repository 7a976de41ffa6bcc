// Copyright 2026 The CSE Toolkit Authors
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

#ifndef CSE_CLI_HPP_
#define CSE_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace cse {

inline constexpr const char* kVersion = "cse-toolkit 0.1.0";

// Runs one CLI invocation. `args` excludes the program name. Returns the
// process exit code: 0 on success or a verified result, 2 on a valid
// negative answer (deviation found, target not individually rational, no
// double-max profile, support search exhausted), 1 on errors.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace cse

#endif  // CSE_CLI_HPP_
