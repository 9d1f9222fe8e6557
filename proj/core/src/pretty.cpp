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

#include <sstream>

#include "rsl/parser.hpp"

namespace rsl {
namespace {

// Printing contexts, from most to least permissive.
//   Open:   lambda, case and let may extend to the right unbracketed.
//   Closed: something follows on the same level, so open-ended forms need
//           brackets.
//   Head:   function position of an application.
//   Arg:    operand position.
enum class Ctx { Open, Closed, Head, Arg };

std::string pp(const TermPtr& t, Ctx ctx, bool root = false);

std::string paren(const std::string& s) { return "(" + s + ")"; }

std::string pp_where(const node::Where& w, bool root) {
  std::string out = pp(w.body, Ctx::Open);
  out += root ? "\nwhere\n" : " where ";
  for (std::size_t i = 0; i < w.defs.size(); ++i) {
    if (i > 0) out += root ? "\n" : " ";
    out += w.defs[i].name + " = " + pp(w.defs[i].body, Ctx::Open);
  }
  return root ? out : paren(out);
}

std::string pp(const TermPtr& t, Ctx ctx, bool root) {
  if (const auto* v = t->as<node::Var>()) return v->name;
  if (const auto* c = t->as<node::Call>()) return c->name;
  if (const auto* c = t->as<node::Con>()) {
    if (c->args.empty()) return ctx == Ctx::Head ? paren(c->name) : c->name;
    std::string out = c->name;
    for (const auto& a : c->args) out += " " + pp(a, Ctx::Arg);
    return (ctx == Ctx::Head || ctx == Ctx::Arg) ? paren(out) : out;
  }
  if (t->is<node::App>()) {
    Spine s = spine(t);
    std::string out = pp(s.head, Ctx::Head);
    for (const auto& a : s.args) out += " " + pp(a, Ctx::Arg);
    return ctx == Ctx::Arg ? paren(out) : out;
  }
  if (const auto* w = t->as<node::Where>()) return pp_where(*w, root);

  std::string out;
  if (t->is<node::Lam>()) {
    LambdaChain ch = lambda_chain(t);
    out = "\\";
    for (std::size_t i = 0; i < ch.params.size(); ++i) {
      out += (i ? " " : "") + ch.params[i];
    }
    out += " -> " + pp(ch.body, Ctx::Open);
  } else if (const auto* c = t->as<node::Case>()) {
    out = "case " + pp(c->scrutinee, Ctx::Closed) + " of ";
    for (std::size_t i = 0; i < c->alts.size(); ++i) {
      const auto& alt = c->alts[i];
      if (i > 0) out += " | ";
      if (alt.pattern.is_wildcard()) {
        out += "_";
      } else {
        out += alt.pattern.con;
        for (const auto& v : alt.pattern.vars) out += " " + v;
      }
      bool last = i + 1 == c->alts.size();
      out += " -> " + pp(alt.body, last ? Ctx::Open : Ctx::Closed);
    }
  } else {
    const auto& l = *t->as<node::Let>();
    out = "let " + l.name + " = " + pp(l.bound, Ctx::Open) + " in " +
          pp(l.body, Ctx::Open);
  }
  return ctx == Ctx::Open ? out : paren(out);
}

int precedence(FormulaKind k) {
  switch (k) {
    case FormulaKind::Implies: return 1;
    case FormulaKind::Or: return 2;
    case FormulaKind::And: return 3;
    default: return 4;
  }
}

std::string pp_formula(const FormulaPtr& f, int min_prec) {
  std::string out;
  switch (f->kind) {
    case FormulaKind::Atom: return "{ " + pp(f->atom, Ctx::Open) + " }";
    case FormulaKind::Not: out = "!" + pp_formula(f->lhs, 4); break;
    case FormulaKind::Always: out = "G " + pp_formula(f->lhs, 4); break;
    case FormulaKind::Eventually: out = "F " + pp_formula(f->lhs, 4); break;
    case FormulaKind::Next: out = "X " + pp_formula(f->lhs, 4); break;
    case FormulaKind::And:
      out = pp_formula(f->lhs, 3) + " && " + pp_formula(f->rhs, 4);
      break;
    case FormulaKind::Or:
      out = pp_formula(f->lhs, 2) + " || " + pp_formula(f->rhs, 3);
      break;
    case FormulaKind::Implies:
      out = pp_formula(f->lhs, 2) + " => " + pp_formula(f->rhs, 1);
      break;
  }
  return precedence(f->kind) < min_prec ? paren(out) : out;
}

}  // namespace

std::string pretty(const TermPtr& t) { return pp(t, Ctx::Open); }

std::string pretty(const FormulaPtr& f) { return pp_formula(f, 1); }

std::string pretty(const DataDecl& d) {
  std::string out = "data " + d.name;
  for (const auto& p : d.params) out += " " + p;
  out += " =";
  for (std::size_t i = 0; i < d.ctors.size(); ++i) {
    out += (i ? " | " : " ") + d.ctors[i].name;
    for (const auto& f : d.ctors[i].fields) out += " " + f;
  }
  return out;
}

std::string pretty_program(const DataTable& data, const TermPtr& program) {
  std::ostringstream os;
  for (const auto& d : data.user_decls()) os << pretty(d) << "\n";
  if (!data.user_decls().empty()) os << "\n";
  os << pp(program, Ctx::Open, true) << "\n";
  return os.str();
}

}  // namespace rsl
