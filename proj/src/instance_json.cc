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


#include "sbfe/instance_json.h"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sbfe/error.h"

namespace sbfe {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParseError, "at " + where + ": " + what);
}

// Line and column of a byte offset.
std::string Location(const std::string& text, size_t byte) {
  int line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json Parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw Error(ErrorCode::kParseError,
                "at " + Location(text, byte) + ": malformed JSON");
  }
}

void CheckKeys(const json& obj, const std::string& where,
               const std::set<std::string>& allowed) {
  if (!obj.is_object()) Fail(where, "expected an object");
  for (const auto& item : obj.items()) {
    if (!allowed.count(item.key())) {
      Fail(where + "/" + item.key(), "unknown key");
    }
  }
  for (const std::string& key : allowed) {
    if (!obj.contains(key)) Fail(where, "missing key \"" + key + "\"");
  }
}

int GetInt(const json& v, const std::string& where) {
  if (!v.is_number_integer()) Fail(where, "expected an integer");
  return v.get<int>();
}

double GetNumber(const json& v, const std::string& where) {
  if (!v.is_number()) Fail(where, "expected a number");
  return v.get<double>();
}

}  // namespace

Instance InstanceFromJson(const std::string& text) {
  const json doc = Parse(text);
  CheckKeys(doc, "", {"classes"});
  const json& classes = doc["classes"];
  if (!classes.is_array()) Fail("/classes", "expected an array");
  std::vector<ClassSpec> specs;
  for (size_t j = 0; j < classes.size(); ++j) {
    const std::string where = "/classes/" + std::to_string(j);
    CheckKeys(classes[j], where, {"k", "probs"});
    ClassSpec cls;
    cls.k = GetInt(classes[j]["k"], where + "/k");
    const json& probs = classes[j]["probs"];
    if (!probs.is_array()) Fail(where + "/probs", "expected an array");
    for (size_t i = 0; i < probs.size(); ++i) {
      cls.probs.push_back(
          GetNumber(probs[i], where + "/probs/" + std::to_string(i)));
    }
    specs.push_back(std::move(cls));
  }
  return Instance(std::move(specs));
}

std::string InstanceToJson(const Instance& inst) {
  json classes = json::array();
  for (const ClassSpec& cls : inst.classes()) {
    classes.push_back({{"k", cls.k}, {"probs", cls.probs}});
  }
  return json{{"classes", classes}}.dump() + "\n";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << contents;
}

Instance LoadInstance(const std::string& path) {
  return InstanceFromJson(ReadFile(path));
}

void SaveInstance(const Instance& inst, const std::string& path) {
  WriteFile(path, InstanceToJson(inst));
}

StrategyTree StrategyTreeFromJson(const std::string& text) {
  const json doc = Parse(text);
  CheckKeys(doc, "", {"root", "nodes"});
  const json& nodes = doc["nodes"];
  if (!nodes.is_array() || nodes.empty()) {
    Fail("/nodes", "expected a non-empty array");
  }
  StrategyTree tree;
  // The default root occupies id 0; file ids are shifted by one.
  const int shift = tree.size();
  auto child = [&](const json& v, const std::string& where) {
    const int id = GetInt(v, where);
    if (id < 0 || id >= static_cast<int>(nodes.size())) {
      Fail(where, "node id out of range");
    }
    return id + shift;
  };
  for (size_t i = 0; i < nodes.size(); ++i) {
    const std::string where = "/nodes/" + std::to_string(i);
    const json& node = nodes[i];
    if (!node.is_object() || !node.contains("kind") ||
        !node["kind"].is_string()) {
      Fail(where, "expected an object with a string \"kind\"");
    }
    const std::string kind = node["kind"];
    if (kind == "test") {
      CheckKeys(node, where, {"kind", "var", "child0", "child1"});
      tree.AddTest(GetInt(node["var"], where + "/var"),
                   child(node["child0"], where + "/child0"),
                   child(node["child1"], where + "/child1"));
    } else if (kind == "coin") {
      CheckKeys(node, where, {"kind", "alpha", "tails", "heads"});
      tree.AddCoin(GetNumber(node["alpha"], where + "/alpha"),
                   child(node["tails"], where + "/tails"),
                   child(node["heads"], where + "/heads"));
    } else if (kind == "terminal") {
      CheckKeys(node, where, {"kind", "label"});
      const json& l = node["label"];
      Label label;
      if (l == "Found0") {
        label = Label::kFound0;
      } else if (l == "Found1") {
        label = Label::kFound1;
      } else if (l == "Abort") {
        label = Label::kAbort;
      } else {
        Fail(where + "/label", "expected Found0, Found1 or Abort");
      }
      tree.AddTerminal(label);
    } else {
      Fail(where + "/kind", "unknown node kind \"" + kind + "\"");
    }
  }
  tree.set_root(child(doc["root"], "/root"));
  return tree.Compact();
}

std::string StrategyTreeToJson(const StrategyTree& tree) {
  json nodes = json::array();
  for (int id = 0; id < tree.size(); ++id) {
    const TreeNode& n = tree.node(id);
    switch (n.kind) {
      case TreeNode::Kind::kTest:
        nodes.push_back({{"kind", "test"},
                         {"var", n.var},
                         {"child0", n.child[0]},
                         {"child1", n.child[1]}});
        break;
      case TreeNode::Kind::kCoin:
        nodes.push_back({{"kind", "coin"},
                         {"alpha", n.alpha},
                         {"tails", n.child[0]},
                         {"heads", n.child[1]}});
        break;
      case TreeNode::Kind::kTerminal:
        nodes.push_back({{"kind", "terminal"}, {"label", LabelName(n.label)}});
        break;
    }
  }
  return json{{"root", tree.root()}, {"nodes", nodes}}.dump() + "\n";
}

}  // namespace sbfe
