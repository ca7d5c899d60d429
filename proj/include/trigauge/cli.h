// Copyright 2026 The trigauge Authors
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

#ifndef TRIGAUGE_CLI_H_
#define TRIGAUGE_CLI_H_

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "trigauge/tricount.h"

namespace trigauge {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitIo = 1,             // unreadable input or unwritable output
  kExitInvalidInput = 2,   // bad flags, malformed edge list, bad generator parameters
  kExitOracleLimit = 3,    // brute-force oracle refused the graph
  kExitKernelMismatch = 4, // kernels disagreed on a triangle count
  kExitDegenerateFit = 5,  // a group had too few usable records
};

inline constexpr char kWorkersEnvVar[] = "TRIGAUGE_WORKERS";

struct CliHooks {
  // Applied to every kernel result before it is reported; tests use it to
  // simulate a faulty kernel.
  std::function<void(TriangleCount&)> tamper;
};

// args[0] is the program name. Returns one of ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, const CliHooks& hooks = {});

}  // namespace trigauge

#endif  // TRIGAUGE_CLI_H_
