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

#include "rsl/verify.hpp"

#include <optional>

#include "rules.hpp"

namespace rsl {

using detail::tick;

TruthVal prove(const TermPtr& t, const FormulaPtr& f, const FunEnv& env,
               const VisitedSet& visited, CheckContext& ctx) {
  tick(ctx);

  if (const auto* l = t->as<node::Let>()) {
    return prove(l->body, f, env, visited, ctx);
  }
  if (const auto* w = t->as<node::Where>()) {
    return prove(w->body, f, env.extended(w->defs), visited, ctx);
  }

  switch (f->kind) {
    case FormulaKind::Not:
      return not3(prove(t, f->lhs, env, visited, ctx));
    case FormulaKind::And:
      return and3(prove(t, f->lhs, env, visited, ctx),
                  prove(t, f->rhs, env, visited, ctx));
    case FormulaKind::Or:
      return or3(prove(t, f->lhs, env, visited, ctx),
                 prove(t, f->rhs, env, visited, ctx));
    case FormulaKind::Implies:
      return imp3(prove(t, f->lhs, env, visited, ctx),
                  prove(t, f->rhs, env, visited, ctx));
    default:
      break;
  }

  if (const auto* c = t->as<node::Con>()) {
    if (c->name != "Cons" || c->args.size() != 2) {
      throw RuleMismatch("no rule for constructor " + c->name);
    }
    const TermPtr& state = c->args[0];
    const TermPtr& tail = c->args[1];
    switch (f->kind) {
      case FormulaKind::Always:
        return and3(prove(t, f->lhs, env, {}, ctx),
                    prove(tail, f, env, visited, ctx));
      case FormulaKind::Eventually:
        return or3(prove(t, f->lhs, env, {}, ctx),
                   prove(tail, f, env, visited, ctx));
      case FormulaKind::Next:
        return prove(tail, f->lhs, env, visited, ctx);
      default:
        return detail::eval_atom(f->atom, state, ctx);
    }
  }

  if (const auto* c = t->as<node::Case>()) {
    std::vector<TruthVal> vals;
    vals.reserve(c->alts.size());
    for (const auto& alt : c->alts) {
      vals.push_back(prove(alt.body, f, env, visited, ctx));
    }
    TruthVal all = vals.front();
    for (std::size_t i = 1; i < vals.size(); ++i) all = and3(all, vals[i]);
    if (f->kind != FormulaKind::Eventually) return all;
    std::vector<bool> fair = detail::fair_alternatives(*c, ctx.data, ctx.fair);
    std::optional<TruthVal> some;
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (fair[i]) some = some ? or3(*some, vals[i]) : vals[i];
    }
    return some ? or3(*some, all) : all;
  }

  if (t->is<node::Lam>()) throw RuleMismatch("no rule for a lambda");

  Spine s = spine(t);
  if (const auto* fn = s.head->as<node::Call>()) {
    if (visited.count(fn->name)) return detail::revisit_value(f->kind);
    VisitedSet inner = visited;
    inner.insert(fn->name);
    return prove(detail::unfold(fn->name, s.args, env), f, env, inner, ctx);
  }
  if (s.head->is<node::Var>()) return TruthVal::Undefined;
  throw RuleMismatch("no rule for this application head");
}

TruthVal verify(const TermPtr& program, const FormulaPtr& f, CheckContext& ctx) {
  FormReport report = check_simplified(program, ctx.options.form);
  if (!report.conforms) throw NotSimplified(std::move(report));
  return prove(program, f, FunEnv{}, {}, ctx);
}

TruthVal verify(const TermPtr& program, const FormulaPtr& f, const FairSet& fair,
                const DataTable& data, const CheckOptions& opts) {
  CheckContext ctx(data, fair, opts);
  return verify(program, f, ctx);
}

}  // namespace rsl
