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

// Syntax trees for the object language and for LTL formulae.
//
// Terms are immutable and shared through TermPtr. Every node caches its free
// variable set and its free function-call set at construction, so closedness
// queries are O(1) and substitution can skip untouched subtrees.

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace rsl {

struct Term;
using TermPtr = std::shared_ptr<const Term>;
using NameSet = std::set<std::string>;

/// A flat case pattern. An empty constructor name is the wildcard `_`.
struct Pattern {
  std::string con;
  std::vector<std::string> vars;

  bool is_wildcard() const { return con.empty(); }
  static Pattern wildcard() { return {}; }

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

struct Alt {
  Pattern pattern;
  TermPtr body;
};

struct FunDef {
  std::string name;
  TermPtr body;
};

namespace node {
struct Var {
  std::string name;
};
struct Con {
  std::string name;
  std::vector<TermPtr> args;
};
struct Lam {
  std::string param;
  TermPtr body;
};
struct Call {
  std::string name;
};
struct App {
  TermPtr fn;
  TermPtr arg;
};
struct Case {
  TermPtr scrutinee;
  std::vector<Alt> alts;
};
struct Let {
  std::string name;
  TermPtr bound;
  TermPtr body;
};
struct Where {
  TermPtr body;
  std::vector<FunDef> defs;
};
}  // namespace node

struct Term {
  using Node = std::variant<node::Var, node::Con, node::Lam, node::Call,
                            node::App, node::Case, node::Let, node::Where>;

  Node node;
  NameSet free_vars;
  NameSet free_calls;

  template <class T>
  const T* as() const {
    return std::get_if<T>(&node);
  }
  template <class T>
  bool is() const {
    return std::holds_alternative<T>(node);
  }
  bool closed() const { return free_vars.empty(); }
};

// Factories. These are the only supported way to build terms.
TermPtr var(std::string name);
TermPtr con(std::string name, std::vector<TermPtr> args = {});
TermPtr lam(std::string param, TermPtr body);
TermPtr lam(const std::vector<std::string>& params, TermPtr body);
TermPtr call(std::string name);
TermPtr app(TermPtr fn, TermPtr arg);
TermPtr app(TermPtr fn, const std::vector<TermPtr>& args);
TermPtr case_of(TermPtr scrutinee, std::vector<Alt> alts);
TermPtr let_in(std::string name, TermPtr bound, TermPtr body);
TermPtr where(TermPtr body, std::vector<FunDef> defs);
/// `where(call(d.name), defs)` for every d in defs, in order.
std::vector<TermPtr> where_closures(const std::vector<FunDef>& defs);

/// Structural equality; bound names must match exactly.
bool equal(const TermPtr& a, const TermPtr& b);
/// Equality up to consistent renaming of lambda, let and pattern binders.
bool alpha_equal(const TermPtr& a, const TermPtr& b);

const NameSet& free_vars(const TermPtr& t);
/// Every variable name occurring in `t`, bound or free.
NameSet all_names(const TermPtr& t);

using Bindings = std::map<std::string, TermPtr>;

/// Capture-avoiding simultaneous substitution of variables.
TermPtr substitute(const TermPtr& t, const Bindings& vars);
/// Replaces free function calls. A `where` that redefines a name shadows it.
TermPtr substitute_calls(const TermPtr& t, const Bindings& calls);
/// Both at once; binders are renamed against the free variables of both maps.
TermPtr substitute(const TermPtr& t, const Bindings& vars,
                   const Bindings& calls);

/// `base` followed by the smallest positive integer suffix not in `avoid`.
std::string fresh_name(const std::string& base, const NameSet& avoid);

/// Head and arguments of a left-nested application chain.
struct Spine {
  TermPtr head;
  std::vector<TermPtr> args;
};
Spine spine(const TermPtr& t);

/// Number of nested lambdas at the root, and the innermost body.
struct LambdaChain {
  std::vector<std::string> params;
  TermPtr body;
};
LambdaChain lambda_chain(const TermPtr& t);

// ---------------------------------------------------------------------------
// LTL formulae

/// Reserved name of the current observable state inside property atoms.
inline constexpr const char* kStateVar = "s";

enum class FormulaKind { Atom, Not, And, Or, Implies, Always, Eventually, Next };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FormulaKind kind;
  TermPtr atom;      // Atom only
  FormulaPtr lhs;    // unary operand, or left operand
  FormulaPtr rhs;    // right operand of binary connectives
};

FormulaPtr f_atom(TermPtr term);
FormulaPtr f_not(FormulaPtr f);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr f_always(FormulaPtr f);
FormulaPtr f_eventually(FormulaPtr f);
FormulaPtr f_next(FormulaPtr f);

bool equal(const FormulaPtr& a, const FormulaPtr& b);
/// Number of connective and temporal operator nodes plus atoms.
std::size_t formula_size(const FormulaPtr& f);

// ---------------------------------------------------------------------------
// Algebraic data types

/// Name of the datatype whose constructors are the external events.
inline constexpr const char* kEventType = "Event";

struct CtorDecl {
  std::string name;
  /// Field types as written in the declaration; only their count matters.
  std::vector<std::string> fields;

  int arity() const { return static_cast<int>(fields.size()); }
};

struct DataDecl {
  std::string name;
  std::vector<std::string> params;
  std::vector<CtorDecl> ctors;
};

/// Constructor universe of a program. Always contains the builtin
/// `List` (Nil, Cons) and `TruthVal` (True, False, Undefined) types.
class DataTable {
 public:
  DataTable();

  /// Throws std::invalid_argument on a duplicate type or constructor name,
  /// including any attempt to redeclare a builtin constructor.
  void add(DataDecl decl);

  /// Arity of a constructor, or -1 when unknown.
  int arity(const std::string& con) const;
  bool has_constructor(const std::string& con) const { return arity(con) >= 0; }
  /// Datatype declaring `con`, or nullptr.
  const DataDecl* type_of(const std::string& con) const;
  const DataDecl* find_type(const std::string& name) const;
  const std::vector<DataDecl>& decls() const { return decls_; }
  /// Declarations excluding the builtins, in declaration order.
  std::vector<DataDecl> user_decls() const;

  /// Constructors of the `Event` type; empty if it is not declared.
  std::vector<std::string> event_constructors() const;
  /// Every declared constructor of every type.
  std::vector<std::string> all_constructors() const;

  static bool is_builtin_type(const std::string& name);

 private:
  std::vector<DataDecl> decls_;
  std::map<std::string, std::size_t> ctor_type_;
};

}  // namespace rsl
