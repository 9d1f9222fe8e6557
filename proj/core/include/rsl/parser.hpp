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

// Concrete syntax for program (.rsl) and property (.ltl) files, and the
// matching pretty printer. The grammar is documented in docs/formats.md.

#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rsl/ast.hpp"

namespace rsl {

struct Diagnostic {
  int line = 0;
  int col = 0;
  std::string message;

  std::string str() const;
};

struct SourceFile {
  DataTable data;
  TermPtr program;  // null when diagnostics are present
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty() && program != nullptr; }
};

struct NamedFormula {
  std::string name;
  FormulaPtr formula;
};

struct PropertyFile {
  std::vector<NamedFormula> properties;
  std::set<std::string> fair;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
  /// Formula named `name`, or nullptr.
  FormulaPtr find(const std::string& name) const;
};

/// Thrown by the convenience wrappers below.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::vector<Diagnostic> diags);
  const std::vector<Diagnostic>& diagnostics() const { return diags_; }

 private:
  std::vector<Diagnostic> diags_;
};

SourceFile parse_program(std::string_view text);

/// Atom constructors are checked against `data`, which is normally the table
/// of the program the properties are checked against.
PropertyFile parse_properties(std::string_view text, const DataTable& data);

/// Parses a lone term (no data declarations). Throws ParseError.
TermPtr parse_term(std::string_view text, const DataTable& data);
/// Parses a lone formula. Throws ParseError.
FormulaPtr parse_formula(std::string_view text, const DataTable& data);

/// Single-line rendering that parse_term reads back alpha-equivalently.
std::string pretty(const TermPtr& t);
/// Data declarations followed by the program, in .rsl syntax.
std::string pretty_program(const DataTable& data, const TermPtr& program);
std::string pretty(const FormulaPtr& f);
std::string pretty(const DataDecl& d);

}  // namespace rsl
