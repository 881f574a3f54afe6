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


#ifndef SBFE_EXPORT_H_
#define SBFE_EXPORT_H_

#include <string>

#include "sbfe/strategy_dag.h"
#include "sbfe/strategy_tree.h"

namespace sbfe {

// Graphviz output. Test nodes read "x<i>", coins "α=<alpha>", terminals
// carry their label; edges are "0"/"1" after tests and "T"/"H" after coins.
std::string TreeToDot(const StrategyTree& tree);
// States (t, z) of the DAG; random stops appear as coins in front of tests.
std::string DagToDot(const StrategyDag& dag);

}  // namespace sbfe

#endif  // SBFE_EXPORT_H_
