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

#include "rsl/eval.hpp"

#include <utility>

namespace rsl {

FunEnv FunEnv::extended(const std::vector<FunDef>& defs) const {
  FunEnv out = *this;
  for (const auto& d : defs) out.defs_[d.name] = d.body;
  return out;
}

const TermPtr* FunEnv::find(const std::string& name) const {
  auto it = defs_.find(name);
  return it == defs_.end() ? nullptr : &it->second;
}

FuelExhausted::FuelExhausted(std::size_t fuel)
    : EvalError("evaluation did not finish within " + std::to_string(fuel) +
                " steps") {}

StuckError::StuckError(Stuck s) : EvalError("stuck: " + s.reason), stuck_(std::move(s)) {}

bool is_whnf(const TermPtr& t) { return t->is<node::Con>() || t->is<node::Lam>(); }

namespace {

StepResult congruence(StepResult r, auto rebuild) {
  if (auto* red = std::get_if<Reduction>(&r)) {
    red->result = rebuild(red->result);
  }
  return r;
}

Bindings closures(const std::vector<FunDef>& defs) {
  Bindings out;
  std::vector<TermPtr> cs = where_closures(defs);
  for (std::size_t i = 0; i < defs.size(); ++i) out[defs[i].name] = cs[i];
  return out;
}

}  // namespace

StepResult step(const TermPtr& t, const FunEnv& env) {
  if (const auto* v = t->as<node::Var>()) {
    return Stuck{"free variable " + v->name, {}};
  }
  if (is_whnf(t)) return IsValue{};
  if (const auto* c = t->as<node::Call>()) {
    if (const TermPtr* body = env.find(c->name)) {
      return Reduction{ReductionKind::FunUnfold, c->name, *body};
    }
    return Stuck{"unknown function " + c->name, {}};
  }
  if (const auto* a = t->as<node::App>()) {
    if (const auto* l = a->fn->as<node::Lam>()) {
      return Reduction{ReductionKind::Beta, "",
                       substitute(l->body, {{l->param, a->arg}})};
    }
    if (const auto* c = a->fn->as<node::Con>()) {
      return Stuck{"constructor " + c->name + " applied to an argument", {}};
    }
    const TermPtr& arg = a->arg;
    return congruence(step(a->fn, env),
                      [&](const TermPtr& fn) { return app(fn, arg); });
  }
  if (const auto* c = t->as<node::Case>()) {
    if (const auto* k = c->scrutinee->as<node::Con>()) {
      for (const auto& alt : c->alts) {
        if (alt.pattern.is_wildcard()) {
          return Reduction{ReductionKind::ConElim, k->name, alt.body};
        }
        if (alt.pattern.con != k->name) continue;
        Bindings b;
        for (std::size_t i = 0; i < alt.pattern.vars.size(); ++i) {
          b[alt.pattern.vars[i]] = k->args.at(i);
        }
        return Reduction{ReductionKind::ConElim, k->name,
                         substitute(alt.body, b)};
      }
      return Stuck{"no alternative for " + k->name, k->name};
    }
    if (c->scrutinee->is<node::Lam>()) return Stuck{"case of a lambda", {}};
    const auto& alts = c->alts;
    return congruence(step(c->scrutinee, env), [&](const TermPtr& s) {
      return case_of(s, alts);
    });
  }
  if (const auto* l = t->as<node::Let>()) {
    return Reduction{ReductionKind::Beta, "",
                     substitute(l->body, {{l->name, l->bound}})};
  }
  const auto& w = *t->as<node::Where>();
  Bindings local = closures(w.defs);
  if (const auto* c = w.body->as<node::Call>()) {
    for (const auto& d : w.defs) {
      if (d.name == c->name) {
        return Reduction{ReductionKind::FunUnfold, d.name,
                         substitute_calls(d.body, local)};
      }
    }
  }
  return Reduction{ReductionKind::WhereBind, "", substitute_calls(w.body, local)};
}

TermPtr eval_whnf(const TermPtr& t, const FunEnv& env, Fuel& fuel) {
  TermPtr cur = t;
  while (true) {
    StepResult r = step(cur, env);
    if (std::holds_alternative<IsValue>(r)) return cur;
    if (auto* s = std::get_if<Stuck>(&r)) throw StuckError(std::move(*s));
    if (fuel.left == 0) throw FuelExhausted(fuel.limit);
    --fuel.left;
    cur = std::get<Reduction>(std::move(r)).result;
  }
}

TermPtr eval_whnf(const TermPtr& t, const FunEnv& env, std::size_t fuel) {
  Fuel f(fuel);
  return eval_whnf(t, env, f);
}

TermPtr eval_deep(const TermPtr& t, const FunEnv& env, Fuel& fuel) {
  TermPtr w = eval_whnf(t, env, fuel);
  const auto* c = w->as<node::Con>();
  if (!c || c->args.empty()) return w;
  std::vector<TermPtr> args;
  args.reserve(c->args.size());
  for (const auto& a : c->args) args.push_back(eval_deep(a, env, fuel));
  return con(c->name, std::move(args));
}

TermPtr event_list(const std::vector<std::string>& events, bool cycle) {
  static const std::string kCycle = "$cycle";
  TermPtr tail = cycle ? call(kCycle) : con("Nil");
  for (auto it = events.rbegin(); it != events.rend(); ++it) {
    tail = con("Cons", {con(*it), tail});
  }
  if (!cycle) return tail;
  return where(call(kCycle), {FunDef{kCycle, tail}});
}

std::vector<TermPtr> run_trace(const TermPtr& program,
                               const std::vector<std::string>& events,
                               const TraceOptions& opts) {
  if (opts.cycle && events.empty()) {
    throw std::invalid_argument("a cycled event list must be nonempty");
  }
  TermPtr input = event_list(events, opts.cycle);
  TermPtr cur;
  if (program->is<node::Lam>()) {
    cur = app(program, input);
  } else if (program->free_vars.size() == 1) {
    cur = substitute(program, {{*program->free_vars.begin(), input}});
  } else if (program->free_vars.empty()) {
    cur = program;
  } else {
    throw std::invalid_argument(
        "program must take the event list as its only free variable");
  }

  const FunEnv env;
  std::vector<TermPtr> states;
  while (states.size() < opts.max_states) {
    Fuel fuel(opts.fuel);
    TermPtr w;
    try {
      w = eval_whnf(cur, env, fuel);
    } catch (const StuckError& e) {
      if (e.detail().unmatched == "Nil" && !states.empty()) break;
      throw;
    }
    const auto* c = w->as<node::Con>();
    if (c && c->name == "Nil") break;
    if (!c || c->name != "Cons") {
      throw NonConsOutput("program output is not a Cons cell: " +
                          std::string(c ? c->name : "lambda"));
    }
    states.push_back(eval_deep(c->args[0], env, fuel));
    cur = c->args[1];
  }
  return states;
}

}  // namespace rsl
