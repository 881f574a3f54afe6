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


#ifndef SBFE_TOOLS_COMMANDS_H_
#define SBFE_TOOLS_COMMANDS_H_

namespace sbfe {

// Exit codes: 0 success, 1 usage or internal error, 2 validation error,
// 3 oracle size guard.
int RunCli(int argc, char** argv);

}  // namespace sbfe

#endif  // SBFE_TOOLS_COMMANDS_H_
