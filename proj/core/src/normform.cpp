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

#include "rsl/normform.hpp"

#include <map>
#include <set>


namespace rsl {

bool is_state_term(const TermPtr& t) {
  if (t->is<node::Var>()) return true;
  const auto* c = t->as<node::Con>();
  if (!c) return false;
  for (const auto& a : c->args) {
    if (!is_state_term(a)) return false;
  }
  return true;
}

namespace {

class Checker {
 public:
  explicit Checker(const FormOptions& opts) : opts_(opts) {}

  FormReport run(const TermPtr& program) {
    check(program, {}, {}, "");
    report_.conforms = report_.violations.empty();
    return std::move(report_);
  }

 private:
  using Arity = std::map<std::string, std::size_t>;
  using LetVars = std::set<std::string>;

  void flag(const std::string& path, const char* rule, std::string message,
            const TermPtr& t) {
    report_.violations.push_back(Violation{path.empty() ? "/" : path, rule,
                                           std::move(message), t});
  }

  static std::string join(const std::string& path, const std::string& step) {
    return path.empty() ? step : path + "/" + step;
  }

  void check(const TermPtr& t, const LetVars& rho, const Arity& funs,
             const std::string& path) {
    if (const auto* c = t->as<node::Con>()) {
      if (c->name != "Cons" || c->args.size() != 2) {
        flag(path, "cons", "only Cons cells may be emitted, found " + c->name, t);
        return;
      }
      if (opts_.strict_state && !is_state_term(c->args[0])) {
        flag(join(path, "state"), "state",
             "state must be a constructor term over variables", c->args[0]);
      }
      check(c->args[1], rho, funs, join(path, "tail"));
      return;
    }
    if (t->is<node::Lam>()) {
      flag(path, "term", "lambda is not allowed here", t);
      return;
    }
    if (const auto* c = t->as<node::Case>()) {
      const auto* x = c->scrutinee->as<node::Var>();
      if (!x) {
        flag(path, "case", "case scrutinee must be a variable", c->scrutinee);
      } else if (rho.count(x->name)) {
        flag(path, "case", "case scrutinee " + x->name + " is let-bound",
             c->scrutinee);
      }
      std::string here = join(path, "case " + (x ? x->name : std::string("?")));
      for (const auto& alt : c->alts) {
        LetVars inner = rho;
        for (const auto& v : alt.pattern.vars) inner.erase(v);
        check(alt.body, inner, funs,
              join(here, alt.pattern.is_wildcard() ? "_" : alt.pattern.con));
      }
      return;
    }
    if (const auto* l = t->as<node::Let>()) {
      std::string here = join(path, "let " + l->name);
      if (!l->bound->is<node::Lam>()) {
        flag(here, "let", "let-bound term must be a lambda", l->bound);
      } else {
        LambdaChain ch = lambda_chain(l->bound);
        LetVars inner = rho;
        for (const auto& p : ch.params) inner.erase(p);
        check(ch.body, inner, funs, join(here, "bound"));
      }
      LetVars body_rho = rho;
      body_rho.insert(l->name);
      check(l->body, body_rho, funs, join(here, "in"));
      return;
    }
    if (const auto* w = t->as<node::Where>()) {
      Arity inner = funs;
      for (const auto& d : w->defs) inner[d.name] = lambda_chain(d.body).params.size();
      check(w->body, rho, inner, join(path, "where"));
      for (const auto& d : w->defs) {
        LambdaChain ch = lambda_chain(d.body);
        LetVars def_rho = rho;
        for (const auto& p : ch.params) def_rho.erase(p);
        check(ch.body, def_rho, inner, join(path, "where " + d.name));
      }
      return;
    }

    // Application spines: f x1..xn, x e1..en, or a bare variable/call.
    Spine s = spine(t);
    if (const auto* f = s.head->as<node::Call>()) {
      for (const auto& a : s.args) {
        if (!a->is<node::Var>()) {
          flag(path, "call", "arguments of " + f->name + " must be variables", a);
        }
      }
      auto it = funs.find(f->name);
      if (it == funs.end()) {
        flag(path, "call", "call to unknown function " + f->name, t);
      } else if (it->second != s.args.size()) {
        flag(path, "call",
             f->name + " takes " + std::to_string(it->second) +
                 " arguments, called with " + std::to_string(s.args.size()),
             t);
      }
      return;
    }
    if (const auto* x = s.head->as<node::Var>()) {
      if (!rho.count(x->name)) {
        flag(path, "apply",
             "variable " + x->name + " in tail position must be let-bound", t);
        return;
      }
      for (std::size_t i = 0; i < s.args.size(); ++i) {
        check(s.args[i], rho, funs, join(path, "arg" + std::to_string(i + 1)));
      }
      return;
    }
    flag(path, "apply", "application head must be a function or let variable",
         s.head);
  }

  FormOptions opts_;
  FormReport report_;
};

}  // namespace

FormReport check_simplified(const TermPtr& program, const FormOptions& opts) {
  return Checker(opts).run(program);
}

}  // namespace rsl
