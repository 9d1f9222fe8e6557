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

// Randomized cross-checks between the checker, the witness generator and the
// reference semantics. Set RSL_TEST_SEED to reproduce a different run.

#include <doctest.h>

#include <cstdlib>
#include <iostream>

#include "generators.hpp"
#include "rsl/eval.hpp"
#include "rsl/ltlsem.hpp"
#include "rsl/parser.hpp"
#include "rsl/verify.hpp"
#include "rsl/witness.hpp"

using namespace rsl;

namespace {

std::uint64_t seed() {
  const char* env = std::getenv("RSL_TEST_SEED");
  return env ? std::strtoull(env, nullptr, 10) : 20260101;
}

FairSet all_events(const testing::RandomSystem& sys) {
  return FairSet(sys.events.begin(), sys.events.end());
}

std::size_t function_count(const TermPtr& program) {
  return program->as<node::Where>()->defs.size();
}

// Below X the checker splits connectives and F/G over case branches
// independently, so verdicts and traces for such formulas are approximate.
bool uses_next(const FormulaPtr& f) {
  if (f->kind == FormulaKind::Atom) return false;
  if (f->kind == FormulaKind::Next) return true;
  return uses_next(f->lhs) || (f->rhs && uses_next(f->rhs));
}

}  // namespace

TEST_CASE("verify and generate agree on random programs") {
  testing::Rng rng(seed());
  testing::SystemConfig cfg;
  cfg.max_functions = 6;
  cfg.max_events = 4;
  std::size_t pairs = 0;
  std::size_t worst = 0;
  for (int n = 0; n < 600; ++n) {
    testing::RandomSystem sys = testing::random_system(rng, cfg);
    FairSet fair;
    for (const auto& e : sys.events) {
      if (std::bernoulli_distribution(0.7)(rng)) fair.insert(e);
    }
    for (int k = 0; k < 3; ++k) {
      FormulaPtr f = testing::random_formula(rng, sys.data, 2);
      CheckContext vctx(sys.data, fair);
      TruthVal v = verify(sys.program, f, vctx);
      for (TraceSelection sel : {TraceSelection::Evidence, TraceSelection::Shortest}) {
        CheckOptions opts;
        opts.selection = sel;
        CheckContext gctx(sys.data, fair, opts);
        Verdict w = generate(sys.program, f, gctx);
        CHECK(w.truth == v);
        // The bookkeeping does not change which rules fire.
        CHECK(gctx.rule_applications == vctx.rule_applications);
      }
      CHECK(vctx.rule_applications <= kDefaultRuleBudget);
      worst = std::max(worst, vctx.rule_applications);
      ++pairs;
    }
  }
  CHECK(pairs >= 500);
  MESSAGE("most rule applications for one check: " << worst);
}

TEST_CASE("rule applications grow with functions and formula size") {
  testing::Rng rng(seed() + 1);
  testing::SystemConfig cfg;
  cfg.max_functions = 8;
  for (int n = 0; n < 300; ++n) {
    testing::RandomSystem sys = testing::random_system(rng, cfg);
    // Depth-one temporal formulas: the checker visits each function at most
    // once per branch of the formula, so cost stays within a constant factor
    // of |program| x |formula|.
    FormulaPtr f = testing::random_formula(rng, sys.data, 1);
    CheckContext ctx(sys.data, all_events(sys));
    verify(sys.program, f, ctx);
    std::size_t bound = 64 * function_count(sys.program) *
                        formula_size(f) *
                        (sys.events.size() + 2);
    CHECK(ctx.rule_applications <= bound);
  }
}

TEST_CASE("true safety verdicts survive every short run") {
  testing::Rng rng(seed() + 2);
  testing::SystemConfig cfg;
  cfg.max_events = 3;
  int checked = 0;
  for (int n = 0; n < 200; ++n) {
    testing::RandomSystem sys = testing::random_system(rng, cfg);
    FormulaPtr f = f_always(testing::random_formula(rng, sys.data, 0));
    if (verify(sys.program, f, all_events(sys), sys.data) != TruthVal::True) continue;
    ++checked;
    for (const auto& t : enumerate_traces(sys.program, sys.events, 4)) {
      Bounded b = Bounded::Unknown;
      try {
        b = bounded_check(t, f, 0);
      } catch (const AtomUndefined&) {
        continue;
      }
      CHECK(b != Bounded::Unsat);
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("decided verdicts are never refuted by their own trace") {
  testing::Rng rng(seed() + 3);
  int valid = 0;
  for (int n = 0; n < 300; ++n) {
    testing::RandomSystem sys = testing::random_system(rng);
    FormulaPtr f = testing::random_formula(rng, sys.data, 2);
    if (uses_next(f)) continue;
    Verdict v = generate(sys.program, f, all_events(sys), sys.data);
    if (v.truth == TruthVal::Undefined) continue;
    ValidationReport r = validate_verdict(v, f);
    CHECK_MESSAGE(r.result != Validation::Invalid, pretty(f) << " " << r.note);
    if (r.result == Validation::Valid) ++valid;
  }
  CHECK(valid > 0);
}
