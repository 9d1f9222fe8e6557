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

// Recognizer for the tail-recursive simplified form that the verification
// rules require.

#pragma once

#include <string>
#include <vector>

#include "rsl/ast.hpp"

namespace rsl {

struct Violation {
  /// Slash-separated route from the root, e.g. "where f2/case e/Take1".
  std::string path;
  /// Grammar production that was violated: cons, state, call, case, apply,
  /// let, where or term.
  std::string rule;
  std::string message;
  /// Smallest offending subterm.
  TermPtr subterm;
};

struct FormReport {
  bool conforms = true;
  std::vector<Violation> violations;
};

struct FormOptions {
  /// Require the head of every Cons cell to be a constructor term over
  /// variables. When false any term is accepted there.
  bool strict_state = true;
};

FormReport check_simplified(const TermPtr& program, const FormOptions& opts = {});

/// Constructor applications whose leaves are variables or nullary constructors.
bool is_state_term(const TermPtr& t);

}  // namespace rsl
