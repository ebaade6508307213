// Copyright 2026 The newtb Authors
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

#ifndef NEWTB_COMMANDS_HPP
#define NEWTB_COMMANDS_HPP

#include <string>
#include <vector>

namespace newtb {

struct CommandResult {
  int exit_code = 0;   // 0 ok, 2 input error, 3 internal invariant
  std::string output;  // stdout payload (or the error message)
};

// Batch front end: args are "<verb> key=value ...".  Deterministic
// output for identical inputs.
CommandResult run_command(const std::vector<std::string>& args);

std::string usage_text();

}  // namespace newtb

#endif  // NEWTB_COMMANDS_HPP
