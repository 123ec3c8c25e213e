// Copyright 2026 The Taitfoam Authors.
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

#ifndef TAITFOAM_CLI_HPP_
#define TAITFOAM_CLI_HPP_

#include <ostream>

namespace taitfoam {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitMalformedInput = 3,
  kExitTrivalence = 4,
  kExitIo = 5,
};

// Entry point of the taitfoam tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace taitfoam

#endif  // TAITFOAM_CLI_HPP_
