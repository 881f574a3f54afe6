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


#ifndef SBFE_INSTANCE_JSON_H_
#define SBFE_INSTANCE_JSON_H_

#include <string>

#include "sbfe/instance.h"
#include "sbfe/strategy_tree.h"

namespace sbfe {

// {"classes":[{"k":<int>,"probs":[<float>,...]},...]}. Parsing is strict:
// unknown keys and wrong types raise kParseError naming the location. The
// result is not validated.
Instance InstanceFromJson(const std::string& text);
std::string InstanceToJson(const Instance& inst);

Instance LoadInstance(const std::string& path);
void SaveInstance(const Instance& inst, const std::string& path);

// {"root":<int>,"nodes":[{"kind":"test","var":i,"child0":a,"child1":b} |
//   {"kind":"coin","alpha":x,"tails":a,"heads":b} |
//   {"kind":"terminal","label":"Found0"|"Found1"|"Abort"}, ...]}
StrategyTree StrategyTreeFromJson(const std::string& text);
std::string StrategyTreeToJson(const StrategyTree& tree);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& contents);

}  // namespace sbfe

#endif  // SBFE_INSTANCE_JSON_H_
