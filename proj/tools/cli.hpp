// Copyright 2026 The tricount Authors.
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

#ifndef TRICOUNT_TOOLS_CLI_HPP_
#define TRICOUNT_TOOLS_CLI_HPP_

#include <ostream>

namespace tricount_cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInput = 3;
inline constexpr int kExitInvariant = 4;

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace tricount_cli

#endif  // TRICOUNT_TOOLS_CLI_HPP_
