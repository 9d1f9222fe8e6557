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

#include "rules.hpp"

#include <algorithm>

namespace rsl {

NotSimplified::NotSimplified(FormReport report)
    : CheckError(report.violations.empty()
                     ? std::string("program is not in simplified form")
                     : "program is not in simplified form: " +
                           report.violations.front().path + ": " +
                           report.violations.front().message),
      report_(std::move(report)) {}

RuleBudgetExceeded::RuleBudgetExceeded(std::size_t budget)
    : CheckError("rule application budget of " + std::to_string(budget) +
                 " exceeded") {}

namespace detail {

void tick(CheckContext& ctx) {
  if (++ctx.rule_applications > ctx.options.max_rule_applications) {
    throw RuleBudgetExceeded(ctx.options.max_rule_applications);
  }
}

TermPtr unfold(const std::string& name, const std::vector<TermPtr>& args,
               const FunEnv& env) {
  const TermPtr* def = env.find(name);
  if (!def) throw RuleMismatch("call to unknown function " + name);
  LambdaChain ch = lambda_chain(*def);
  if (args.size() < ch.params.size()) {
    throw RuleMismatch("unsaturated call to " + name);
  }
  Bindings b;
  for (std::size_t i = 0; i < ch.params.size(); ++i) b[ch.params[i]] = args[i];
  TermPtr body = substitute(ch.body, b);
  for (std::size_t i = ch.params.size(); i < args.size(); ++i) {
    body = app(body, args[i]);
  }
  return body;
}

std::vector<bool> fair_alternatives(const node::Case& c, const DataTable& data,
                                    const FairSet& fair) {
  std::vector<bool> out;
  std::vector<std::string> matched;
  const DataDecl* type = nullptr;
  for (const auto& alt : c.alts) {
    if (!alt.pattern.is_wildcard()) {
      matched.push_back(alt.pattern.con);
      if (!type) type = data.type_of(alt.pattern.con);
      out.push_back(fair.count(alt.pattern.con) > 0);
      continue;
    }
    bool any = false;
    if (type) {
      for (const auto& ctor : type->ctors) {
        bool residual = std::find(matched.begin(), matched.end(), ctor.name) ==
                        matched.end();
        any = any || (residual && fair.count(ctor.name));
      }
    } else {
      any = !fair.empty();
    }
    out.push_back(any);
  }
  return out;
}

TruthVal eval_atom(const TermPtr& atom, const TermPtr& state,
                   const CheckContext& ctx) {
  TermPtr t = substitute(atom, {{kStateVar, state}});
  TermPtr v;
  try {
    v = eval_whnf(t, FunEnv{}, ctx.options.atom_fuel);
  } catch (const StuckError& e) {
    if (e.detail().reason.rfind("free variable", 0) == 0) {
      return TruthVal::Undefined;
    }
    throw AtomError("atom evaluation is stuck: " + e.detail().reason);
  }
  if (const auto* c = v->as<node::Con>()) {
    if (auto tv = truth_from_string(c->name); tv && c->args.empty()) return *tv;
    throw AtomError("atom evaluated to constructor " + c->name +
                    " instead of a truth value");
  }
  throw AtomError("atom evaluated to a lambda instead of a truth value");
}

TruthVal revisit_value(FormulaKind k) {
  switch (k) {
    case FormulaKind::Always: return TruthVal::True;
    case FormulaKind::Eventually: return TruthVal::False;
    default: return TruthVal::Undefined;
  }
}

bool is_connective(FormulaKind k) {
  return k == FormulaKind::And || k == FormulaKind::Or ||
         k == FormulaKind::Implies || k == FormulaKind::Not;
}

}  // namespace detail
}  // namespace rsl
