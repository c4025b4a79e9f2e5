// Copyright 2026 The Authors.
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

#ifndef PRYMDICE_CLI_H_
#define PRYMDICE_CLI_H_

#include <ostream>

namespace prymdice {

// Exit codes. A negative mathematical verdict is still kOk.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kInternalError = 2,
  kSearchLimitExceeded = 3,
  kNotTotallyUnimodular = 4,
};

// Runs the command line tool. Reports go to `out` (or the -o file), errors
// to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace prymdice

#endif  // PRYMDICE_CLI_H_
