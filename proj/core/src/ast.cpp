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

#include "rsl/ast.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace rsl {
namespace {

void merge(NameSet& into, const NameSet& from) {
  into.insert(from.begin(), from.end());
}

TermPtr make(Term::Node n, NameSet fv, NameSet fc) {
  auto t = std::make_shared<Term>();
  t->node = std::move(n);
  t->free_vars = std::move(fv);
  t->free_calls = std::move(fc);
  return t;
}

bool intersects(const NameSet& names, const Bindings& b) {
  if (b.empty() || names.empty()) return false;
  for (const auto& [k, _] : b) {
    if (names.count(k)) return true;
  }
  return false;
}

}  // namespace

TermPtr var(std::string name) {
  NameSet fv{name};
  return make(node::Var{std::move(name)}, std::move(fv), {});
}

TermPtr con(std::string name, std::vector<TermPtr> args) {
  NameSet fv, fc;
  for (const auto& a : args) {
    merge(fv, a->free_vars);
    merge(fc, a->free_calls);
  }
  return make(node::Con{std::move(name), std::move(args)}, std::move(fv),
              std::move(fc));
}

TermPtr lam(std::string param, TermPtr body) {
  NameSet fv = body->free_vars;
  fv.erase(param);
  NameSet fc = body->free_calls;
  return make(node::Lam{std::move(param), std::move(body)}, std::move(fv),
              std::move(fc));
}

TermPtr lam(const std::vector<std::string>& params, TermPtr body) {
  for (auto it = params.rbegin(); it != params.rend(); ++it) {
    body = lam(*it, std::move(body));
  }
  return body;
}

TermPtr call(std::string name) {
  NameSet fc{name};
  return make(node::Call{std::move(name)}, {}, std::move(fc));
}

TermPtr app(TermPtr fn, TermPtr arg) {
  NameSet fv = fn->free_vars;
  merge(fv, arg->free_vars);
  NameSet fc = fn->free_calls;
  merge(fc, arg->free_calls);
  return make(node::App{std::move(fn), std::move(arg)}, std::move(fv),
              std::move(fc));
}

TermPtr app(TermPtr fn, const std::vector<TermPtr>& args) {
  for (const auto& a : args) fn = app(std::move(fn), a);
  return fn;
}

TermPtr case_of(TermPtr scrutinee, std::vector<Alt> alts) {
  NameSet fv = scrutinee->free_vars;
  NameSet fc = scrutinee->free_calls;
  for (const auto& alt : alts) {
    NameSet body_fv = alt.body->free_vars;
    for (const auto& v : alt.pattern.vars) body_fv.erase(v);
    merge(fv, body_fv);
    merge(fc, alt.body->free_calls);
  }
  return make(node::Case{std::move(scrutinee), std::move(alts)},
              std::move(fv), std::move(fc));
}

TermPtr let_in(std::string name, TermPtr bound, TermPtr body) {
  NameSet fv = body->free_vars;
  fv.erase(name);
  merge(fv, bound->free_vars);
  NameSet fc = bound->free_calls;
  merge(fc, body->free_calls);
  return make(node::Let{std::move(name), std::move(bound), std::move(body)},
              std::move(fv), std::move(fc));
}

TermPtr where(TermPtr body, std::vector<FunDef> defs) {
  NameSet fv = body->free_vars;
  NameSet fc = body->free_calls;
  for (const auto& d : defs) {
    merge(fv, d.body->free_vars);
    merge(fc, d.body->free_calls);
  }
  for (const auto& d : defs) fc.erase(d.name);
  return make(node::Where{std::move(body), std::move(defs)}, std::move(fv),
              std::move(fc));
}

std::vector<TermPtr> where_closures(const std::vector<FunDef>& defs) {
  NameSet fv;
  NameSet fc;
  for (const auto& d : defs) {
    merge(fv, d.body->free_vars);
    merge(fc, d.body->free_calls);
  }
  for (const auto& d : defs) fc.erase(d.name);
  std::vector<TermPtr> out;
  out.reserve(defs.size());
  for (const auto& d : defs) {
    out.push_back(make(node::Where{call(d.name), defs}, fv, fc));
  }
  return out;
}

// ---------------------------------------------------------------------------

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->node.index() != b->node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b->node);
        if constexpr (std::is_same_v<T, node::Var> ||
                      std::is_same_v<T, node::Call>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, node::Con>) {
          if (x.name != y.name || x.args.size() != y.args.size()) return false;
          for (std::size_t i = 0; i < x.args.size(); ++i) {
            if (!equal(x.args[i], y.args[i])) return false;
          }
          return true;
        } else if constexpr (std::is_same_v<T, node::Lam>) {
          return x.param == y.param && equal(x.body, y.body);
        } else if constexpr (std::is_same_v<T, node::App>) {
          return equal(x.fn, y.fn) && equal(x.arg, y.arg);
        } else if constexpr (std::is_same_v<T, node::Case>) {
          if (!equal(x.scrutinee, y.scrutinee) ||
              x.alts.size() != y.alts.size()) {
            return false;
          }
          for (std::size_t i = 0; i < x.alts.size(); ++i) {
            if (!(x.alts[i].pattern == y.alts[i].pattern) ||
                !equal(x.alts[i].body, y.alts[i].body)) {
              return false;
            }
          }
          return true;
        } else if constexpr (std::is_same_v<T, node::Let>) {
          return x.name == y.name && equal(x.bound, y.bound) &&
                 equal(x.body, y.body);
        } else {
          if (!equal(x.body, y.body) || x.defs.size() != y.defs.size()) {
            return false;
          }
          for (std::size_t i = 0; i < x.defs.size(); ++i) {
            if (x.defs[i].name != y.defs[i].name ||
                !equal(x.defs[i].body, y.defs[i].body)) {
              return false;
            }
          }
          return true;
        }
      },
      a->node);
}

namespace {

using BinderStack = std::vector<std::pair<std::string, std::string>>;

bool alpha_rec(const TermPtr& a, const TermPtr& b, BinderStack& st) {
  if (a->node.index() != b->node.index()) return false;
  if (const auto* x = a->as<node::Var>()) {
    const auto& y = *b->as<node::Var>();
    for (auto it = st.rbegin(); it != st.rend(); ++it) {
      bool left = it->first == x->name;
      bool right = it->second == y.name;
      if (left || right) return left && right;
    }
    return x->name == y.name;
  }
  if (const auto* x = a->as<node::Call>()) {
    return x->name == b->as<node::Call>()->name;
  }
  if (const auto* x = a->as<node::Con>()) {
    const auto& y = *b->as<node::Con>();
    if (x->name != y.name || x->args.size() != y.args.size()) return false;
    for (std::size_t i = 0; i < x->args.size(); ++i) {
      if (!alpha_rec(x->args[i], y.args[i], st)) return false;
    }
    return true;
  }
  if (const auto* x = a->as<node::Lam>()) {
    const auto& y = *b->as<node::Lam>();
    st.emplace_back(x->param, y.param);
    bool ok = alpha_rec(x->body, y.body, st);
    st.pop_back();
    return ok;
  }
  if (const auto* x = a->as<node::App>()) {
    const auto& y = *b->as<node::App>();
    return alpha_rec(x->fn, y.fn, st) && alpha_rec(x->arg, y.arg, st);
  }
  if (const auto* x = a->as<node::Case>()) {
    const auto& y = *b->as<node::Case>();
    if (!alpha_rec(x->scrutinee, y.scrutinee, st) ||
        x->alts.size() != y.alts.size()) {
      return false;
    }
    for (std::size_t i = 0; i < x->alts.size(); ++i) {
      const auto& pa = x->alts[i].pattern;
      const auto& pb = y.alts[i].pattern;
      if (pa.con != pb.con || pa.vars.size() != pb.vars.size()) return false;
      for (std::size_t k = 0; k < pa.vars.size(); ++k) {
        st.emplace_back(pa.vars[k], pb.vars[k]);
      }
      bool ok = alpha_rec(x->alts[i].body, y.alts[i].body, st);
      st.resize(st.size() - pa.vars.size());
      if (!ok) return false;
    }
    return true;
  }
  if (const auto* x = a->as<node::Let>()) {
    const auto& y = *b->as<node::Let>();
    if (!alpha_rec(x->bound, y.bound, st)) return false;
    st.emplace_back(x->name, y.name);
    bool ok = alpha_rec(x->body, y.body, st);
    st.pop_back();
    return ok;
  }
  const auto& x = *a->as<node::Where>();
  const auto& y = *b->as<node::Where>();
  if (x.defs.size() != y.defs.size() || !alpha_rec(x.body, y.body, st)) {
    return false;
  }
  for (std::size_t i = 0; i < x.defs.size(); ++i) {
    if (x.defs[i].name != y.defs[i].name ||
        !alpha_rec(x.defs[i].body, y.defs[i].body, st)) {
      return false;
    }
  }
  return true;
}

void collect_names(const TermPtr& t, NameSet& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, node::Var>) {
          out.insert(x.name);
        } else if constexpr (std::is_same_v<T, node::Con>) {
          for (const auto& a : x.args) collect_names(a, out);
        } else if constexpr (std::is_same_v<T, node::Lam>) {
          out.insert(x.param);
          collect_names(x.body, out);
        } else if constexpr (std::is_same_v<T, node::App>) {
          collect_names(x.fn, out);
          collect_names(x.arg, out);
        } else if constexpr (std::is_same_v<T, node::Case>) {
          collect_names(x.scrutinee, out);
          for (const auto& alt : x.alts) {
            out.insert(alt.pattern.vars.begin(), alt.pattern.vars.end());
            collect_names(alt.body, out);
          }
        } else if constexpr (std::is_same_v<T, node::Let>) {
          out.insert(x.name);
          collect_names(x.bound, out);
          collect_names(x.body, out);
        } else if constexpr (std::is_same_v<T, node::Where>) {
          collect_names(x.body, out);
          for (const auto& d : x.defs) collect_names(d.body, out);
        }
      },
      t->node);
}

class Substituter {
 public:
  TermPtr run(const TermPtr& t, const Bindings& vars, const Bindings& calls) {
    if (!intersects(t->free_vars, vars) && !intersects(t->free_calls, calls)) {
      return t;
    }
    return std::visit([&](const auto& x) { return go(t, x, vars, calls); },
                      t->node);
  }

 private:
  // Free variables of the replacement terms that are relevant for `body`.
  static NameSet range_fv(const TermPtr& body, const Bindings& vars,
                          const Bindings& calls) {
    NameSet out;
    for (const auto& [k, v] : vars) {
      if (body->free_vars.count(k)) merge(out, v->free_vars);
    }
    for (const auto& [k, v] : calls) {
      if (body->free_calls.count(k)) merge(out, v->free_vars);
    }
    return out;
  }

  // Handles one scope that binds `binders` over `body`. Returns the new
  // binder names and the rewritten body.
  std::pair<std::vector<std::string>, TermPtr> under_binders(
      const std::vector<std::string>& binders, const TermPtr& body,
      const Bindings& vars, const Bindings& calls) {
    Bindings inner = vars;
    for (const auto& b : binders) inner.erase(b);
    std::vector<std::string> names = binders;
    if (!intersects(body->free_vars, inner) &&
        !intersects(body->free_calls, calls)) {
      return {names, body};
    }
    NameSet captured = range_fv(body, inner, calls);
    bool any = std::any_of(binders.begin(), binders.end(),
                           [&](const auto& b) { return captured.count(b); });
    if (any) {
      NameSet avoid = all_names(body);
      merge(avoid, captured);
      for (const auto& [k, _] : inner) avoid.insert(k);
      avoid.insert(binders.begin(), binders.end());
      for (auto& n : names) {
        if (!captured.count(n)) continue;
        std::string fresh = fresh_name(n, avoid);
        avoid.insert(fresh);
        inner[n] = var(fresh);
        n = fresh;
      }
    }
    return {names, run(body, inner, calls)};
  }

  TermPtr go(const TermPtr& t, const node::Var& x, const Bindings& vars,
             const Bindings&) {
    auto it = vars.find(x.name);
    return it == vars.end() ? t : it->second;
  }
  TermPtr go(const TermPtr& t, const node::Call& x, const Bindings&,
             const Bindings& calls) {
    auto it = calls.find(x.name);
    return it == calls.end() ? t : it->second;
  }
  TermPtr go(const TermPtr&, const node::Con& x, const Bindings& vars,
             const Bindings& calls) {
    std::vector<TermPtr> args;
    args.reserve(x.args.size());
    for (const auto& a : x.args) args.push_back(run(a, vars, calls));
    return con(x.name, std::move(args));
  }
  TermPtr go(const TermPtr&, const node::Lam& x, const Bindings& vars,
             const Bindings& calls) {
    auto [names, body] = under_binders({x.param}, x.body, vars, calls);
    return lam(names[0], body);
  }
  TermPtr go(const TermPtr&, const node::App& x, const Bindings& vars,
             const Bindings& calls) {
    return app(run(x.fn, vars, calls), run(x.arg, vars, calls));
  }
  TermPtr go(const TermPtr&, const node::Case& x, const Bindings& vars,
             const Bindings& calls) {
    std::vector<Alt> alts;
    alts.reserve(x.alts.size());
    for (const auto& alt : x.alts) {
      auto [names, body] =
          under_binders(alt.pattern.vars, alt.body, vars, calls);
      alts.push_back(Alt{Pattern{alt.pattern.con, names}, body});
    }
    return case_of(run(x.scrutinee, vars, calls), std::move(alts));
  }
  TermPtr go(const TermPtr&, const node::Let& x, const Bindings& vars,
             const Bindings& calls) {
    auto [names, body] = under_binders({x.name}, x.body, vars, calls);
    return let_in(names[0], run(x.bound, vars, calls), body);
  }
  TermPtr go(const TermPtr&, const node::Where& x, const Bindings& vars,
             const Bindings& calls) {
    Bindings inner_calls = calls;
    for (const auto& d : x.defs) inner_calls.erase(d.name);
    std::vector<FunDef> defs;
    defs.reserve(x.defs.size());
    for (const auto& d : x.defs) {
      defs.push_back(FunDef{d.name, run(d.body, vars, inner_calls)});
    }
    return where(run(x.body, vars, inner_calls), std::move(defs));
  }
};

}  // namespace

bool alpha_equal(const TermPtr& a, const TermPtr& b) {
  BinderStack st;
  return alpha_rec(a, b, st);
}

const NameSet& free_vars(const TermPtr& t) { return t->free_vars; }

NameSet all_names(const TermPtr& t) {
  NameSet out;
  collect_names(t, out);
  return out;
}

TermPtr substitute(const TermPtr& t, const Bindings& vars) {
  return Substituter{}.run(t, vars, {});
}

TermPtr substitute_calls(const TermPtr& t, const Bindings& calls) {
  return Substituter{}.run(t, {}, calls);
}

TermPtr substitute(const TermPtr& t, const Bindings& vars,
                   const Bindings& calls) {
  return Substituter{}.run(t, vars, calls);
}

std::string fresh_name(const std::string& base, const NameSet& avoid) {
  for (std::size_t k = 1;; ++k) {
    std::string candidate = base + std::to_string(k);
    if (!avoid.count(candidate)) return candidate;
  }
}

Spine spine(const TermPtr& t) {
  Spine s;
  TermPtr cur = t;
  while (const auto* a = cur->as<node::App>()) {
    s.args.push_back(a->arg);
    cur = a->fn;
  }
  std::reverse(s.args.begin(), s.args.end());
  s.head = cur;
  return s;
}

LambdaChain lambda_chain(const TermPtr& t) {
  LambdaChain c;
  TermPtr cur = t;
  while (const auto* l = cur->as<node::Lam>()) {
    c.params.push_back(l->param);
    cur = l->body;
  }
  c.body = cur;
  return c;
}

// ---------------------------------------------------------------------------

namespace {
FormulaPtr make_formula(FormulaKind k, TermPtr atom, FormulaPtr lhs,
                        FormulaPtr rhs) {
  return std::make_shared<const Formula>(
      Formula{k, std::move(atom), std::move(lhs), std::move(rhs)});
}
}  // namespace

FormulaPtr f_atom(TermPtr term) {
  return make_formula(FormulaKind::Atom, std::move(term), nullptr, nullptr);
}
FormulaPtr f_not(FormulaPtr f) {
  return make_formula(FormulaKind::Not, nullptr, std::move(f), nullptr);
}
FormulaPtr f_and(FormulaPtr a, FormulaPtr b) {
  return make_formula(FormulaKind::And, nullptr, std::move(a), std::move(b));
}
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) {
  return make_formula(FormulaKind::Or, nullptr, std::move(a), std::move(b));
}
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b) {
  return make_formula(FormulaKind::Implies, nullptr, std::move(a),
                      std::move(b));
}
FormulaPtr f_always(FormulaPtr f) {
  return make_formula(FormulaKind::Always, nullptr, std::move(f), nullptr);
}
FormulaPtr f_eventually(FormulaPtr f) {
  return make_formula(FormulaKind::Eventually, nullptr, std::move(f),
                      nullptr);
}
FormulaPtr f_next(FormulaPtr f) {
  return make_formula(FormulaKind::Next, nullptr, std::move(f), nullptr);
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  if (a->kind == FormulaKind::Atom) return equal(a->atom, b->atom);
  return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
}

std::size_t formula_size(const FormulaPtr& f) {
  if (!f) return 0;
  return 1 + formula_size(f->lhs) + formula_size(f->rhs);
}

}  // namespace rsl
