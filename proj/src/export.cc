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


#include "sbfe/export.h"

#include <sstream>

#include "sbfe/piecewise_linear.h"

namespace sbfe {

std::string TreeToDot(const StrategyTree& tree) {
  std::ostringstream out;
  out << "digraph strategy {\n  node [fontname=\"Helvetica\"];\n";
  for (int id : tree.Preorder()) {
    const TreeNode& n = tree.node(id);
    switch (n.kind) {
      case TreeNode::Kind::kTest:
        out << "  n" << id << " [shape=circle,label=\"x" << n.var << "\"];\n";
        out << "  n" << id << " -> n" << n.child[0] << " [label=\"0\"];\n";
        out << "  n" << id << " -> n" << n.child[1] << " [label=\"1\"];\n";
        break;
      case TreeNode::Kind::kCoin:
        out << "  n" << id << " [shape=diamond,label=\"α="
            << FormatDouble(n.alpha) << "\"];\n";
        out << "  n" << id << " -> n" << n.child[0] << " [label=\"T\"];\n";
        out << "  n" << id << " -> n" << n.child[1] << " [label=\"H\"];\n";
        break;
      case TreeNode::Kind::kTerminal:
        out << "  n" << id << " [shape=box,label=\"" << LabelName(n.label)
            << "\"];\n";
        break;
    }
  }
  out << "}\n";
  return out.str();
}

std::string DagToDot(const StrategyDag& dag) {
  std::ostringstream out;
  out << "digraph strategy {\n  node [fontname=\"Helvetica\"];\n";
  auto name = [](int t, int z) {
    return "s" + std::to_string(t) + "_" + std::to_string(z);
  };
  auto entry = [&](int t, int z) {
    const double s = dag.stop(t, z);
    return (s > 0.0 && s < 1.0) ? "c" + name(t, z).substr(1) : name(t, z);
  };
  for (int t = 0; t <= dag.length(); ++t) {
    for (int z = dag.lo(t); z <= dag.hi(t); ++z) {
      const double s = dag.stop(t, z);
      const std::string id = name(t, z);
      if (s >= 1.0) {
        out << "  " << id << " [shape=box,label=\"" << LabelName(dag.LabelAt(t, z))
            << "\"];\n";
        continue;
      }
      if (s > 0.0) {
        const std::string coin = entry(t, z);
        const std::string stop = "h" + id.substr(1);
        out << "  " << coin << " [shape=diamond,label=\"α=" << FormatDouble(s)
            << "\"];\n";
        out << "  " << stop << " [shape=box,label=\""
            << LabelName(dag.LabelAt(t, z)) << "\"];\n";
        out << "  " << coin << " -> " << stop << " [label=\"H\"];\n";
        out << "  " << coin << " -> " << id << " [label=\"T\"];\n";
      }
      out << "  " << id << " [shape=circle,label=\"x" << dag.sequence()[t]
          << "\"];\n";
      out << "  " << id << " -> " << entry(t + 1, z + 1) << " [label=\"0\"];\n";
      out << "  " << id << " -> " << entry(t + 1, z) << " [label=\"1\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace sbfe
