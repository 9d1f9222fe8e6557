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

#include "rsl/parser.hpp"

#include <map>
#include <sstream>
#include <utility>

#include "lexer.hpp"

namespace rsl {

using detail::SyntaxError;
using detail::Tok;
using detail::Token;

std::string Diagnostic::str() const {
  std::ostringstream os;
  os << line << ":" << col << ": " << message;
  return os.str();
}

ParseError::ParseError(std::vector<Diagnostic> diags)
    : std::runtime_error(diags.empty() ? std::string("parse error")
                                       : diags.front().str()),
      diags_(std::move(diags)) {}

FormulaPtr PropertyFile::find(const std::string& name) const {
  for (const auto& p : properties) {
    if (p.name == name) return p.formula;
  }
  return nullptr;
}

namespace {

// Scope entry: true for a where-bound function, false for a variable binder.
using Scope = std::map<std::string, bool>;

TermPtr resolve(const TermPtr& t, const Scope& scope);

TermPtr resolve_under(const TermPtr& body, const Scope& scope,
                      const std::vector<std::string>& binders) {
  Scope inner = scope;
  for (const auto& b : binders) inner[b] = false;
  return resolve(body, inner);
}

// Turns variables that name an enclosing where-bound function into calls.
TermPtr resolve(const TermPtr& t, const Scope& scope) {
  if (const auto* v = t->as<node::Var>()) {
    auto it = scope.find(v->name);
    return (it != scope.end() && it->second) ? call(v->name) : t;
  }
  if (t->is<node::Call>()) return t;
  if (const auto* c = t->as<node::Con>()) {
    std::vector<TermPtr> args;
    for (const auto& a : c->args) args.push_back(resolve(a, scope));
    return con(c->name, std::move(args));
  }
  if (const auto* l = t->as<node::Lam>()) {
    return lam(l->param, resolve_under(l->body, scope, {l->param}));
  }
  if (const auto* a = t->as<node::App>()) {
    return app(resolve(a->fn, scope), resolve(a->arg, scope));
  }
  if (const auto* c = t->as<node::Case>()) {
    std::vector<Alt> alts;
    for (const auto& alt : c->alts) {
      alts.push_back(
          Alt{alt.pattern, resolve_under(alt.body, scope, alt.pattern.vars)});
    }
    return case_of(resolve(c->scrutinee, scope), std::move(alts));
  }
  if (const auto* l = t->as<node::Let>()) {
    return let_in(l->name, resolve(l->bound, scope),
                  resolve_under(l->body, scope, {l->name}));
  }
  const auto& w = *t->as<node::Where>();
  Scope inner = scope;
  for (const auto& d : w.defs) inner[d.name] = true;
  std::vector<FunDef> defs;
  for (const auto& d : w.defs) defs.push_back(FunDef{d.name, resolve(d.body, inner)});
  return where(resolve(w.body, inner), std::move(defs));
}

class Parser {
 public:
  Parser(std::string_view text, const DataTable& data)
      : toks_(detail::tokenize(text)), data_(&data) {}

  void set_data(const DataTable& data) { data_ = &data; }

  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at(Tok k) const { return peek().kind == k; }
  Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw SyntaxError(t.line, t.col, msg);
  }
  [[noreturn]] void unexpected(const std::string& wanted) const {
    fail(peek(), "expected " + wanted + ", found " +
                     (peek().kind == Tok::End ? std::string("end of input")
                                              : "'" + peek().text + "'"));
  }
  Token expect(Tok k) {
    if (!at(k)) unexpected(detail::describe(k));
    return next();
  }

  // ---- data declarations --------------------------------------------------

  DataDecl parse_data() {
    expect(Tok::KwData);
    DataDecl d;
    d.name = expect(Tok::Upper).text;
    while (at(Tok::Lower)) d.params.push_back(next().text);
    expect(Tok::Equals);
    do {
      Token c = expect(Tok::Upper);
      CtorDecl ctor{c.text, {}};
      while (peek().line == c.line &&
             (at(Tok::Upper) || at(Tok::Lower) || at(Tok::LParen))) {
        ctor.fields.push_back(type_atom());
      }
      d.ctors.push_back(std::move(ctor));
    } while (at(Tok::Bar) && (next(), true));
    return d;
  }

  std::string type_atom() {
    if (!at(Tok::LParen)) return next().text;
    std::string text = next().text;
    int depth = 1;
    while (depth > 0) {
      if (at(Tok::End)) unexpected("')'");
      Token t = next();
      if (t.kind == Tok::LParen) ++depth;
      if (t.kind == Tok::RParen) --depth;
      if (text.size() > 1 && t.kind != Tok::RParen) text += ' ';
      text += t.text;
    }
    return text;
  }

  // ---- terms ---------------------------------------------------------------

  TermPtr term(bool allow_where) {
    TermPtr t = open_term();
    if (at(Tok::KwWhere)) {
      if (!allow_where) {
        fail(peek(), "'where' is only allowed at top level or in parentheses");
      }
      next();
      t = where(t, defs());
    }
    return t;
  }

  std::vector<FunDef> defs() {
    std::vector<FunDef> out;
    if (!def_start()) unexpected("function definition");
    while (def_start()) {
      Token name = next();
      next();
      for (const auto& d : out) {
        if (d.name == name.text) fail(name, "duplicate function " + name.text);
      }
      out.push_back(FunDef{name.text, open_term()});
    }
    return out;
  }

  bool def_start() const {
    return peek().kind == Tok::Lower && peek(1).kind == Tok::Equals;
  }

  TermPtr open_term() {
    switch (peek().kind) {
      case Tok::Backslash: return lambda();
      case Tok::KwCase: return case_expr();
      case Tok::KwLet: return let_expr();
      default: return app_expr();
    }
  }

  TermPtr lambda() {
    expect(Tok::Backslash);
    std::vector<std::string> params;
    if (!at(Tok::Lower)) unexpected("parameter name");
    while (at(Tok::Lower)) params.push_back(next().text);
    expect(Tok::Arrow);
    return lam(params, open_term());
  }

  TermPtr let_expr() {
    expect(Tok::KwLet);
    std::string name = expect(Tok::Lower).text;
    expect(Tok::Equals);
    TermPtr bound = open_term();
    expect(Tok::KwIn);
    return let_in(name, bound, open_term());
  }

  TermPtr case_expr() {
    expect(Tok::KwCase);
    TermPtr scrutinee = open_term();
    expect(Tok::KwOf);
    std::vector<Alt> alts;
    bool wildcard_seen = false;
    while (true) {
      Token start = peek();
      if (wildcard_seen) fail(start, "wildcard alternative must be last");
      Pattern p = pattern();
      if (p.is_wildcard()) {
        wildcard_seen = true;
      } else {
        for (const auto& a : alts) {
          if (a.pattern.con == p.con) {
            fail(start, "duplicate constructor " + p.con + " in case");
          }
        }
      }
      expect(Tok::Arrow);
      alts.push_back(Alt{std::move(p), open_term()});
      if (!at(Tok::Bar)) break;
      next();
    }
    return case_of(scrutinee, std::move(alts));
  }

  Pattern pattern() {
    if (at(Tok::Underscore)) {
      next();
      return Pattern::wildcard();
    }
    if (!at(Tok::Upper)) unexpected("pattern");
    Token c = next();
    Pattern p{c.text, {}};
    while (true) {
      if (at(Tok::Lower)) {
        Token v = next();
        for (const auto& prev : p.vars) {
          if (prev == v.text) fail(v, "repeated pattern variable " + v.text);
        }
        p.vars.push_back(v.text);
      } else if (at(Tok::Upper) || at(Tok::LParen) || at(Tok::Underscore)) {
        fail(peek(), "nested pattern");
      } else {
        break;
      }
    }
    check_arity(c, p.vars.size());
    return p;
  }

  void check_arity(const Token& c, std::size_t got) const {
    int n = data_->arity(c.text);
    if (n < 0) fail(c, "unknown constructor " + c.text);
    if (static_cast<std::size_t>(n) != got) {
      fail(c, "constructor arity: " + c.text + " expects " + std::to_string(n) +
                  " argument" + (n == 1 ? "" : "s") + ", got " +
                  std::to_string(got));
    }
  }

  bool atom_start() const {
    switch (peek().kind) {
      case Tok::Lower: return peek(1).kind != Tok::Equals;
      case Tok::Upper:
      case Tok::LParen: return true;
      default: return false;
    }
  }

  TermPtr app_expr() {
    if (at(Tok::Upper)) {
      Token c = next();
      std::vector<TermPtr> args;
      while (atom_start()) args.push_back(atom());
      check_arity(c, args.size());
      return con(c.text, std::move(args));
    }
    if (!atom_start()) unexpected("term");
    TermPtr head = atom();
    while (atom_start()) head = app(head, atom());
    return head;
  }

  TermPtr atom() {
    if (at(Tok::Lower)) return var(next().text);
    if (at(Tok::Upper)) {
      Token c = next();
      check_arity(c, 0);
      return con(c.text);
    }
    if (at(Tok::LParen)) {
      next();
      TermPtr t = term(true);
      expect(Tok::RParen);
      return t;
    }
    unexpected("term");
  }

  // ---- formulas ------------------------------------------------------------

  FormulaPtr formula() {
    FormulaPtr lhs = disjunction();
    if (at(Tok::Implies)) {
      next();
      return f_implies(lhs, formula());
    }
    return lhs;
  }

  FormulaPtr disjunction() {
    FormulaPtr f = conjunction();
    while (at(Tok::OrOr)) {
      next();
      f = f_or(f, conjunction());
    }
    return f;
  }

  FormulaPtr conjunction() {
    FormulaPtr f = unary();
    while (at(Tok::AndAnd)) {
      next();
      f = f_and(f, unary());
    }
    return f;
  }

  FormulaPtr unary() {
    const Token& t = peek();
    if (t.kind == Tok::Bang) {
      next();
      return f_not(unary());
    }
    if (t.kind == Tok::Upper && (t.text == "G" || t.text == "F" || t.text == "X")) {
      std::string op = next().text;
      FormulaPtr sub = unary();
      if (op == "G") return f_always(sub);
      if (op == "F") return f_eventually(sub);
      return f_next(sub);
    }
    if (t.kind == Tok::LParen) {
      next();
      FormulaPtr f = formula();
      expect(Tok::RParen);
      return f;
    }
    if (t.kind == Tok::LBrace) {
      Token open = next();
      TermPtr body = resolve(term(false), {});
      expect(Tok::RBrace);
      for (const auto& v : body->free_vars) {
        if (v != kStateVar) fail(open, "free variable " + v + " in atom");
      }
      return f_atom(body);
    }
    unexpected("formula");
  }

  // ---- files ---------------------------------------------------------------

  SourceFile program_file() {
    SourceFile out;
    while (at(Tok::KwData)) {
      Token start = peek();
      DataDecl d = parse_data();
      try {
        out.data.add(std::move(d));
      } catch (const std::invalid_argument& e) {
        fail(start, e.what());
      }
    }
    set_data(out.data);
    TermPtr t = term(true);
    if (!at(Tok::End)) unexpected("end of input");
    out.program = resolve(t, {});
    return out;
  }

  PropertyFile property_file() {
    PropertyFile out;
    while (!at(Tok::End)) {
      if (at(Tok::KwFair)) {
        next();
        expect(Tok::Colon);
        while (at(Tok::Upper)) {
          Token c = next();
          if (data_->arity(c.text) != 0) {
            fail(c, "unknown fairness constructor " + c.text);
          }
          out.fair.insert(c.text);
          if (!at(Tok::Comma)) break;
          next();
        }
        continue;
      }
      expect(Tok::KwProp);
      if (!at(Tok::Lower) && !at(Tok::Upper)) unexpected("property name");
      Token name = next();
      if (out.find(name.text)) fail(name, "duplicate property " + name.text);
      expect(Tok::Colon);
      out.properties.push_back(NamedFormula{name.text, formula()});
    }
    return out;
  }

  bool done() const { return at(Tok::End); }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const DataTable* data_;
};

Diagnostic to_diag(const SyntaxError& e) {
  return Diagnostic{e.line, e.col, e.what()};
}

}  // namespace

SourceFile parse_program(std::string_view text) {
  DataTable scratch;
  try {
    Parser p(text, scratch);
    return p.program_file();
  } catch (const SyntaxError& e) {
    SourceFile out;
    out.diagnostics.push_back(to_diag(e));
    return out;
  }
}

PropertyFile parse_properties(std::string_view text, const DataTable& data) {
  try {
    Parser p(text, data);
    return p.property_file();
  } catch (const SyntaxError& e) {
    PropertyFile out;
    out.diagnostics.push_back(to_diag(e));
    return out;
  }
}

TermPtr parse_term(std::string_view text, const DataTable& data) {
  try {
    Parser p(text, data);
    TermPtr t = p.term(true);
    if (!p.done()) p.unexpected("end of input");
    return resolve(t, {});
  } catch (const SyntaxError& e) {
    throw ParseError({to_diag(e)});
  }
}

FormulaPtr parse_formula(std::string_view text, const DataTable& data) {
  try {
    Parser p(text, data);
    FormulaPtr f = p.formula();
    if (!p.done()) p.unexpected("end of input");
    return f;
  } catch (const SyntaxError& e) {
    throw ParseError({to_diag(e)});
  }
}

}  // namespace rsl
