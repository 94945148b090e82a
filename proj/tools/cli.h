// Copyright 2026 The gwlkit Authors
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

#ifndef GWLKIT_TOOLS_CLI_H_
#define GWLKIT_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace gwl::cli {

// Process exit statuses.
inline constexpr int kExitIndistinguishable = 0;  // also "isomorphic", plain success
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;
inline constexpr int kExitCap = 4;
inline constexpr int kExitDistinguished = 10;  // also "not isomorphic"

// Runs one command line (without the program name). The float tolerance is
// taken from --tolerance, else from GWLKIT_TOLERANCE, else the default, and
// restored on return.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace gwl::cli

#endif  // GWLKIT_TOOLS_CLI_H_
