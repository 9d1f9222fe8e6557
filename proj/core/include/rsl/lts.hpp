/* Copyright 2026 The rslcheck Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// Labelled transition systems read off reactive simplified-form programs.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rsl/ast.hpp"

namespace rsl {

struct LtsNode {
  std::size_t id;
  std::string fun;
  TermPtr state;
};

inline constexpr const char* kWildcardLabel = "_";

struct LtsEdge {
  std::size_t from;
  std::string label;  // event constructor or kWildcardLabel
  std::size_t to;
  /// Events a wildcard edge stands for; empty for explicit labels.
  std::vector<std::string> residual;

  bool self_loop() const { return from == to; }
  bool accepts(const std::string& event) const;
};

struct Lts {
  std::size_t initial = 0;
  std::vector<LtsNode> nodes;
  std::vector<LtsEdge> edges;

  std::size_t edge_count(bool include_self_loops) const;
  const LtsNode* node_of(const std::string& fun) const;
};

class LtsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The program is not a top-level Cons into a where whose functions each
/// dispatch on the next event and emit one Cons cell per branch.
class NotReactiveShape : public LtsError {
 public:
  using LtsError::LtsError;
};

/// Two transitions into the same function emit different states.
class InconsistentNodeState : public LtsError {
 public:
  using LtsError::LtsError;
};

Lts extract_lts(const TermPtr& program, const DataTable& data);

/// States visited when feeding `events` from the initial node, starting with
/// the initial state. Throws LtsError when no edge accepts an event.
std::vector<TermPtr> walk(const Lts& lts, const std::vector<std::string>& events);

/// Graphviz digraph; one line per node and one per edge.
std::string to_dot(const Lts& lts, bool include_self_loops);

nlohmann::ordered_json to_json(const Lts& lts, bool include_self_loops);
/// {"con": name, "args": [...]}.
nlohmann::ordered_json state_to_json(const TermPtr& state);

}  // namespace rsl
