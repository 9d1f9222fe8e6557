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

#include "rsl/witness.hpp"

#include <optional>

#include "rules.hpp"

namespace rsl {

using detail::tick;

namespace {

Trace appended(const Trace& acc, const TermPtr& state) {
  Trace out = acc;
  out.push_back(state);
  return out;
}

}  // namespace

Verdict gen(const TermPtr& t, const FormulaPtr& f, const FunEnv& env,
            const VisitedSet& visited, const Trace& acc, CheckContext& ctx) {
  tick(ctx);
  const VerdictAlgebra alg(ctx.options.selection, ctx.options.observer);

  if (const auto* l = t->as<node::Let>()) {
    return gen(l->body, f, env, visited, acc, ctx);
  }
  if (const auto* w = t->as<node::Where>()) {
    return gen(w->body, f, env.extended(w->defs), visited, acc, ctx);
  }

  switch (f->kind) {
    case FormulaKind::Not:
      return alg.not_v(gen(t, f->lhs, env, visited, acc, ctx));
    case FormulaKind::And:
      return alg.and_v(gen(t, f->lhs, env, visited, acc, ctx),
                       gen(t, f->rhs, env, visited, acc, ctx));
    case FormulaKind::Or:
      return alg.or_v(gen(t, f->lhs, env, visited, acc, ctx),
                      gen(t, f->rhs, env, visited, acc, ctx));
    case FormulaKind::Implies:
      return alg.imp_v(gen(t, f->lhs, env, visited, acc, ctx),
                       gen(t, f->rhs, env, visited, acc, ctx));
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
        return alg.and_v(gen(t, f->lhs, env, {}, acc, ctx),
                         gen(tail, f, env, visited, appended(acc, state), ctx));
      case FormulaKind::Eventually:
        return alg.or_v(gen(t, f->lhs, env, {}, acc, ctx),
                        gen(tail, f, env, visited, appended(acc, state), ctx));
      case FormulaKind::Next:
        return gen(tail, f->lhs, env, visited, appended(acc, state), ctx);
      default:
        return Verdict{detail::eval_atom(f->atom, state, ctx),
                       appended(acc, state)};
    }
  }

  if (const auto* c = t->as<node::Case>()) {
    std::vector<Verdict> vals;
    vals.reserve(c->alts.size());
    for (const auto& alt : c->alts) {
      vals.push_back(gen(alt.body, f, env, visited, acc, ctx));
    }
    Verdict all = vals.front();
    for (std::size_t i = 1; i < vals.size(); ++i) all = alg.and_v(all, vals[i]);
    if (f->kind != FormulaKind::Eventually) return all;
    std::vector<bool> fair = detail::fair_alternatives(*c, ctx.data, ctx.fair);
    std::optional<Verdict> some;
    for (std::size_t i = 0; i < vals.size(); ++i) {
      if (fair[i]) some = some ? alg.or_v(*some, vals[i]) : vals[i];
    }
    return some ? alg.or_v(*some, all) : all;
  }

  if (t->is<node::Lam>()) throw RuleMismatch("no rule for a lambda");

  Spine s = spine(t);
  if (const auto* fn = s.head->as<node::Call>()) {
    if (visited.count(fn->name)) {
      return Verdict{detail::revisit_value(f->kind), acc};
    }
    VisitedSet inner = visited;
    inner.insert(fn->name);
    return gen(detail::unfold(fn->name, s.args, env), f, env, inner, acc, ctx);
  }
  if (s.head->is<node::Var>()) return Verdict{TruthVal::Undefined, acc};
  throw RuleMismatch("no rule for this application head");
}

Verdict generate(const TermPtr& program, const FormulaPtr& f, CheckContext& ctx) {
  FormReport report = check_simplified(program, ctx.options.form);
  if (!report.conforms) throw NotSimplified(std::move(report));
  return gen(program, f, FunEnv{}, {}, {}, ctx);
}

Verdict generate(const TermPtr& program, const FormulaPtr& f, const FairSet& fair,
                 const DataTable& data, const CheckOptions& opts) {
  CheckContext ctx(data, fair, opts);
  return generate(program, f, ctx);
}

Lasso lassoify(const Trace& t) {
  if (t.empty()) throw EmptyTrace();
  const TermPtr& last = t.back();
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (equal(t[i], last)) {
      return Lasso{Trace(t.begin(), t.begin() + i),
                   Trace(t.begin() + i, t.end() - 1)};
    }
  }
  return Lasso{t, {}};
}

const char* to_string(Validation v) {
  switch (v) {
    case Validation::Valid: return "Valid";
    case Validation::Invalid: return "Invalid";
    default: return "Inconclusive";
  }
}

ValidationReport validate_verdict(const Verdict& v, const FormulaPtr& f,
                                  std::size_t fuel) {
  ValidationReport out;
  if (v.trace.empty()) {
    out.note = "empty trace";
    return out;
  }
  out.lasso = lassoify(v.trace);
  try {
    out.bounded = bounded_check(v.trace, f, 0, fuel);
  } catch (const AtomUndefined&) {
    out.note = "an atom is undefined on the trace";
  }
  if (v.truth == TruthVal::Undefined) {
    out.note = "undefined verdicts make no claim";
    return out;
  }
  const bool claim = v.truth == TruthVal::True;
  if (!out.lasso.loop.empty()) {
    try {
      out.result = sat_lasso(out.lasso, 0, f, fuel) == claim ? Validation::Valid
                                                              : Validation::Invalid;
    } catch (const AtomUndefined&) {
      out.note = "an atom is undefined on the lasso";
    }
    return out;
  }
  if (out.bounded && *out.bounded != Bounded::Unknown) {
    out.result = (*out.bounded == Bounded::Sat) == claim ? Validation::Valid
                                                          : Validation::Invalid;
    out.note = "decided on the finite prefix";
  } else if (out.note.empty()) {
    out.note = "no repeated state and the prefix does not decide";
  }
  return out;
}

}  // namespace rsl
