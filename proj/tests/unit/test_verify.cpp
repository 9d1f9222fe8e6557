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

#include <doctest.h>

#include "fixtures.hpp"
#include "rsl/parser.hpp"
#include "rsl/verify.hpp"
#include "rsl/witness.hpp"

using namespace rsl;

namespace {

constexpr TruthVal T = TruthVal::True;
constexpr TruthVal F = TruthVal::False;
constexpr TruthVal U = TruthVal::Undefined;

const char* kGoStop =
    "data Event = Go | Stop\n"
    "data S = A | B\n"
    "Cons A (f es)\n"
    "where\n"
    "f = \\es -> case es of\n"
    "  Cons e r -> case e of\n"
    "      Go -> Cons B (g r)\n"
    "    | _ -> Cons A (f r)\n"
    "g = \\es -> Cons B (g es)\n";

const char* kConstant =
    "data S = A | B\n"
    "Cons A (f es) where f = \\es -> Cons A (f es)\n";

SourceFile load(const char* text) {
  SourceFile f = parse_program(text);
  REQUIRE_MESSAGE(f.ok(), (f.diagnostics.empty() ? "" : f.diagnostics[0].str()));
  return f;
}

TruthVal check(const SourceFile& f, const char* formula, const FairSet& fair = {}) {
  return verify(f.program, parse_formula(formula, f.data), fair, f.data);
}

}  // namespace

TEST_CASE("corpus verdict matrix") {
  for (const auto& entry : testing::corpus()) {
    LoadedEntry e = load_entry(entry);
    FairSet fair(e.properties.fair.begin(), e.properties.fair.end());
    for (const auto& [name, expected] : entry.expected) {
      FormulaPtr p = e.properties.find(name);
      REQUIRE(p);
      TruthVal got = verify(e.source.program, p, fair, e.source.data);
      CHECK_MESSAGE(got == expected, entry.name << " " << name);
      Verdict v = generate(e.source.program, p, fair, e.source.data);
      CHECK(v.truth == got);
    }
  }
}

TEST_CASE("a constant loop") {
  SourceFile f = load(kConstant);
  CHECK(check(f, "G {case s of A -> True | _ -> False}") == T);
  CHECK(check(f, "F {case s of B -> True | _ -> False}") == F);
  CHECK(check(f, "X {case s of A -> True | _ -> False}") == T);
  // A second X revisits f, which decides nothing for X.
  CHECK(check(f, "X X {case s of B -> True | _ -> False}") == U);
  CHECK(check(f, "G F {case s of A -> True | _ -> False}") == T);
  CHECK(check(f, "!G {case s of A -> True | _ -> False}") == F);
  CHECK(check(f, "{True} && {False}") == F);
  CHECK(check(f, "{False} => {False}") == T);
}

TEST_CASE("revisiting a function") {
  SourceFile f = load(kConstant);
  DataTable data = f.data;
  CheckContext ctx(data, {});
  FunEnv env = FunEnv{}.extended(f.program->as<node::Where>()->defs);
  TermPtr t = app(call("f"), var("es"));
  FormulaPtr atom = f_atom(con("True"));
  CHECK(prove(t, f_always(atom), env, {"f"}, ctx) == T);
  CHECK(prove(t, f_eventually(atom), env, {"f"}, ctx) == F);
  CHECK(prove(t, f_next(atom), env, {"f"}, ctx) == U);
  CHECK(prove(t, atom, env, {"f"}, ctx) == U);
  // Without the revisit the call unfolds to a Cons cell.
  CHECK(prove(t, f_eventually(atom), env, {}, ctx) == T);
  CHECK(prove(t, atom, env, {}, ctx) == T);
}

TEST_CASE("an unknown continuation is undefined") {
  DataTable data;
  CheckContext ctx(data, {});
  TermPtr t = app(var("k"), var("es"));
  for (FormulaPtr g : {f_always(f_atom(con("True"))), f_atom(con("False")),
                       f_next(f_atom(con("True")))}) {
    CHECK(prove(t, g, FunEnv{}, {}, ctx) == U);
  }
  SourceFile f = load(
      "data S = A | B\n"
      "let k = \\x -> Cons A (f x) in k (Cons B (f es)) where f = \\es -> Cons B (f es)");
  CHECK(check(f, "G {True}") == U);
  CHECK(check(f, "!F {True}") == U);
  CHECK(check(f, "G {True} && {False}") == U);
}

TEST_CASE("eventually honours fairness") {
  SourceFile f = load(kGoStop);
  const char* eventually_b = "F {case s of B -> True | _ -> False}";
  CHECK(check(f, eventually_b, {"Go"}) == T);
  CHECK(check(f, eventually_b, {"Go", "Stop"}) == T);
  CHECK(check(f, eventually_b, {}) == F);
  CHECK(check(f, eventually_b, {"Stop"}) == F);
  // Always does not depend on fairness.
  const char* always_a = "G {case s of A -> True | _ -> False}";
  CHECK(check(f, always_a, {"Go"}) == F);
  CHECK(check(f, always_a, {}) == F);
}

TEST_CASE("atoms") {
  SourceFile f = load(kConstant);
  CHECK_THROWS_AS(check(f, "{case s of A -> A | _ -> B}"), AtomError);
  CheckContext ctx(f.data, {});
  CHECK(verify(f.program, f_atom(var("t")), ctx) == U);
}

TEST_CASE("programs outside simplified form are rejected") {
  SourceFile f = load("data S = A | B\nCons A (f (Cons A es)) where f = \\x -> Cons A (f x)");
  try {
    check(f, "G {True}");
    FAIL("expected NotSimplified");
  } catch (const NotSimplified& e) {
    CHECK(!e.report().conforms);
    CHECK(!e.report().violations.empty());
  }
  CHECK_THROWS_AS(generate(f.program, f_atom(con("True")), {}, f.data), NotSimplified);
}

TEST_CASE("rule budget") {
  LoadedEntry e = testing::corpus_entry("example1");
  FormulaPtr p = e.properties.find("nonstarve1");
  REQUIRE(p);
  FairSet fair(e.properties.fair.begin(), e.properties.fair.end());
  CheckOptions opts;
  opts.max_rule_applications = 50;
  CHECK_THROWS_AS(verify(e.source.program, p, fair, e.source.data, opts),
                  RuleBudgetExceeded);
  CheckContext ctx(e.source.data, fair);
  verify(e.source.program, p, ctx);
  CHECK(ctx.rule_applications > 50);
  CHECK(ctx.rule_applications <= kDefaultRuleBudget);
}
