//  Copyright 2026 the declat authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// Command-line front end, callable in-process for tests.

#ifndef DECLAT_CLI_HPP
#define DECLAT_CLI_HPP

#include <string>
#include <vector>

namespace declat {

struct RunResult {
  int exit_code = 0;
  std::string out;  // stdout payload
  std::string err;  // stderr log lines
};

// Runs one command. Args exclude the program name.
// Exit codes: 0 success, 1 failed check or structural defect, 2 input
// error, 3 resource cap exceeded.
RunResult run_cli(const std::vector<std::string>& args);

}  // namespace declat

#endif  // DECLAT_CLI_HPP
