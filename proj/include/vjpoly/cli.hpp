// Copyright 2026 The vjpoly Authors
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

#ifndef VJPOLY_CLI_HPP_
#define VJPOLY_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace vjpoly {

// Runs the command line `args` (without the program name). Results go to
// `out`; failures print one "error: <Code>: <detail>" line to `err`.
// Returns 0 on success, 1 on domain errors and 2 on parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace vjpoly

#endif  // VJPOLY_CLI_HPP_
