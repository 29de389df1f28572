// Copyright 2026 The TIE-ML Tools Authors.
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

#ifndef TIEML_TOOLS_CLI_H_
#define TIEML_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace tieml::cli {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitContent = 1;
inline constexpr int kExitEnvironment = 2;

struct Environment {
  // TIEML_LENIENT=1
  bool lenient = false;
};

Environment EnvironmentFromProcess();

// Runs the tieml command line. args excludes the program name.
int Run(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
        std::ostream &err, const Environment &env = {});

}  // namespace tieml::cli

#endif  // TIEML_TOOLS_CLI_H_
