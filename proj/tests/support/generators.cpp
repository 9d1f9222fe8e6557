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

#include "generators.hpp"

#include <algorithm>
#include <functional>

#include "rsl/parser.hpp"

namespace rsl::testing {
namespace {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <class T>
const T& pick(Rng& rng, const std::vector<T>& v) {
  return v[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(v.size()) - 1))];
}

const std::vector<std::string> kVars = {"x", "y", "z", "w", "s"};
const std::vector<std::string> kFuns = {"f", "g", "h"};
const std::vector<std::pair<std::string, int>> kCons = {
    {"A", 0}, {"B", 1}, {"C", 2}, {"D", 0}};

TermPtr term(Rng& rng, int depth, const std::vector<std::string>& funs) {
  if (depth <= 0) {
    int k = uniform(rng, 0, funs.empty() ? 1 : 2);
    if (k == 0) return var(pick(rng, kVars));
    if (k == 1) return con(chance(rng, 0.5) ? "A" : "D");
    return call(pick(rng, funs));
  }
  switch (uniform(rng, 0, 7)) {
    case 0: return var(pick(rng, kVars));
    case 1: {
      const auto& [name, arity] = pick(rng, kCons);
      std::vector<TermPtr> args;
      for (int i = 0; i < arity; ++i) args.push_back(term(rng, depth - 1, funs));
      return con(name, std::move(args));
    }
    case 2: return lam(pick(rng, kVars), term(rng, depth - 1, funs));
    case 3: return app(term(rng, depth - 1, funs), term(rng, depth - 1, funs));
    case 4: {
      std::vector<std::pair<std::string, int>> cons = kCons;
      std::shuffle(cons.begin(), cons.end(), rng);
      int n = uniform(rng, 1, 3);
      std::vector<Alt> alts;
      for (int i = 0; i < n; ++i) {
        Pattern p{cons[i].first, {}};
        std::vector<std::string> vars = kVars;
        std::shuffle(vars.begin(), vars.end(), rng);
        for (int k = 0; k < cons[i].second; ++k) p.vars.push_back(vars[k]);
        alts.push_back(Alt{p, term(rng, depth - 1, funs)});
      }
      if (chance(rng, 0.4)) {
        alts.push_back(Alt{Pattern::wildcard(), term(rng, depth - 1, funs)});
      }
      return case_of(term(rng, depth - 1, funs), std::move(alts));
    }
    case 5:
      return let_in(pick(rng, kVars), term(rng, depth - 1, funs),
                    term(rng, depth - 1, funs));
    case 6: {
      int n = uniform(rng, 1, 3);
      std::vector<std::string> names(kFuns.begin(), kFuns.begin() + n);
      std::vector<std::string> inner = funs;
      for (const auto& f : names) {
        if (std::find(inner.begin(), inner.end(), f) == inner.end()) inner.push_back(f);
      }
      std::vector<FunDef> defs;
      for (const auto& f : names) defs.push_back(FunDef{f, term(rng, depth - 1, inner)});
      return where(term(rng, depth - 1, inner), std::move(defs));
    }
    default:
      if (!funs.empty() && chance(rng, 0.5)) return call(pick(rng, funs));
      return var(pick(rng, kVars));
  }
}

TermPtr state(Rng& rng) {
  static const std::vector<std::string> procs = {"A", "B", "C"};
  return con("P", {con(pick(rng, procs)), con(pick(rng, procs))});
}

std::string fname(int i) { return "f" + std::to_string(i + 1); }

}  // namespace

DataTable small_table() {
  DataTable t;
  t.add(DataDecl{"Small", {}, {{"A", {}}, {"B", {"Small"}}, {"C", {"Small", "Small"}}, {"D", {}}}});
  return t;
}

TermPtr random_term(Rng& rng, int depth) { return term(rng, depth, {}); }

RandomSystem random_system(Rng& rng, const SystemConfig& cfg) {
  RandomSystem sys;
  int nev = uniform(rng, 1, cfg.max_events);
  DataDecl ev{kEventType, {}, {}};
  for (int i = 0; i < nev; ++i) {
    ev.ctors.push_back(CtorDecl{"E" + std::to_string(i + 1), {}});
    sys.events.push_back(ev.ctors.back().name);
  }
  sys.data.add(ev);
  sys.data.add(DataDecl{"St", {}, {{"A", {}}, {"B", {}}, {"C", {}}}});
  sys.data.add(DataDecl{"Obs", {}, {{"P", {"St", "St"}}}});

  int nfun = uniform(rng, 1, cfg.max_functions);
  std::vector<TermPtr> entry_state;
  for (int i = 0; i < nfun; ++i) entry_state.push_back(state(rng));
  std::vector<FunDef> defs;
  for (int i = 0; i < nfun; ++i) {
    std::string rest = chance(rng, 0.5) ? "es" : "rest";
    bool first_branch = true;
    auto emit = [&](const std::string& list) -> TermPtr {
      int t = uniform(rng, 0, nfun - 1);
      if (cfg.reactive) {
        if (first_branch) t = (i + 1) % nfun;
        first_branch = false;
        return con("Cons", {entry_state[t], app(call(fname(t)), var(list))});
      }
      TermPtr tail = app(call(fname(t)), var(list));
      if (chance(rng, cfg.double_emit_probability)) tail = con("Cons", {state(rng), tail});
      return con("Cons", {state(rng), tail});
    };
    auto branch = [&]() -> TermPtr {
      if (!cfg.reactive && chance(rng, cfg.let_probability)) {
        TermPtr bound = lam("x", emit("x"));
        return let_in("k", bound, app(var("k"), emit(rest)));
      }
      return emit(rest);
    };
    std::vector<std::string> evs = sys.events;
    std::shuffle(evs.begin(), evs.end(), rng);
    int explicit_n = uniform(rng, 0, nev);
    std::vector<Alt> alts;
    for (int k = 0; k < explicit_n; ++k) alts.push_back(Alt{Pattern{evs[k], {}}, branch()});
    if (explicit_n < nev || chance(rng, 0.2)) {
      alts.push_back(Alt{Pattern::wildcard(), branch()});
    }
    TermPtr inner = case_of(var("e"), std::move(alts));
    TermPtr outer = case_of(var("es"), {Alt{Pattern{"Cons", {"e", rest}}, inner}});
    defs.push_back(FunDef{fname(i), lam("es", outer)});
  }
  TermPtr initial = cfg.reactive ? entry_state[0] : state(rng);
  sys.program = where(con("Cons", {initial, app(call(fname(0)), var("es"))}),
                      std::move(defs));
  return sys;
}

FormulaPtr random_formula(Rng& rng, const DataTable& data, int temporal_depth) {
  auto atom = [&]() -> FormulaPtr {
    static const std::vector<std::string> procs = {"A", "B", "C"};
    if (chance(rng, 0.05)) {
      static const std::vector<std::string> consts = {"True", "False", "Undefined"};
      return f_atom(con(pick(rng, consts)));
    }
    std::string which = chance(rng, 0.5) ? "a" : "b";
    std::string text = "case s of P a b -> case " + which + " of " +
                       pick(rng, procs) + " -> True | _ -> False";
    return f_atom(parse_term(text, data));
  };
  std::function<FormulaPtr(int, int)> go = [&](int size, int tdepth) -> FormulaPtr {
    if (size <= 0) return atom();
    int k = uniform(rng, 0, tdepth > 0 ? 6 : 3);
    switch (k) {
      case 0: return f_not(go(size - 1, tdepth));
      case 1: return f_and(go(size - 1, tdepth), go(size - 1, tdepth));
      case 2: return f_or(go(size - 1, tdepth), go(size - 1, tdepth));
      case 3: return f_implies(go(size - 1, tdepth), go(size - 1, tdepth));
      case 4: return f_always(go(size - 1, tdepth - 1));
      case 5: return f_eventually(go(size - 1, tdepth - 1));
      default: return f_next(go(size - 1, tdepth - 1));
    }
  };
  return go(uniform(rng, 1, 3), temporal_depth);
}

}  // namespace rsl::testing
