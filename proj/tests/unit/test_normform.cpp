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
#include "generators.hpp"
#include "rsl/normform.hpp"
#include "rsl/parser.hpp"

using namespace rsl;

namespace {

FormReport check_text(const std::string& text) {
  SourceFile f = parse_program(text);
  REQUIRE_MESSAGE(f.ok(), (f.diagnostics.empty() ? "" : f.diagnostics[0].str()));
  return check_simplified(f.program);
}

bool has_rule(const FormReport& r, const std::string& rule) {
  for (const auto& v : r.violations) {
    if (v.rule == rule) return true;
  }
  return false;
}

// Grammar-derived structural assertion: a call may only appear as the head
// of an application spine whose position is the tail of a Cons cell, a let
// argument, or a case branch; never as an argument of a call or inside a
// state.
bool only_tail_calls(const TermPtr& t, bool tail_position) {
  if (t->is<node::Call>()) return tail_position;
  if (const auto* c = t->as<node::Con>()) {
    if (c->name == "Cons" && c->args.size() == 2) {
      return only_tail_calls(c->args[0], false) && only_tail_calls(c->args[1], true);
    }
    for (const auto& a : c->args) {
      if (!only_tail_calls(a, false)) return false;
    }
    return true;
  }
  if (t->is<node::App>()) {
    Spine s = spine(t);
    bool head_ok = s.head->is<node::Call>() ? tail_position
                                            : only_tail_calls(s.head, false);
    if (!head_ok) return false;
    bool var_head = s.head->is<node::Var>();
    for (const auto& a : s.args) {
      if (!only_tail_calls(a, var_head)) return false;
    }
    return true;
  }
  if (const auto* l = t->as<node::Lam>()) return only_tail_calls(l->body, true);
  if (const auto* c = t->as<node::Case>()) {
    if (!only_tail_calls(c->scrutinee, false)) return false;
    for (const auto& alt : c->alts) {
      if (!only_tail_calls(alt.body, tail_position)) return false;
    }
    return true;
  }
  if (const auto* l = t->as<node::Let>()) {
    return only_tail_calls(l->bound, true) && only_tail_calls(l->body, tail_position);
  }
  if (const auto* w = t->as<node::Where>()) {
    for (const auto& d : w->defs) {
      if (!only_tail_calls(d.body, true)) return false;
    }
    return only_tail_calls(w->body, tail_position);
  }
  return true;
}

const char* kHeader = "data Event = Go | Stop\ndata S = A | B\n";

}  // namespace

TEST_CASE("corpus programs conform") {
  for (const auto& entry : testing::corpus()) {
    LoadedEntry e = load_entry(entry);
    FormReport r = check_simplified(e.source.program);
    CHECK_MESSAGE(r.conforms, entry.name);
    CHECK(r.violations.empty());
    CHECK(only_tail_calls(e.source.program, true));
  }
}

TEST_CASE("case scrutinee must be a variable") {
  FormReport r = check_text(std::string(kHeader) +
                            "Cons A (f es) where\n"
                            "f = \\es -> case g es of Cons e r -> Cons A (f r)\n"
                            "g = \\x -> Cons A (g x)");
  CHECK(!r.conforms);
  REQUIRE(has_rule(r, "case"));
  CHECK(r.violations[0].message == "case scrutinee must be a variable");
  CHECK(pretty(r.violations[0].subterm) == "g es");
}

TEST_CASE("case on a let-bound variable is rejected") {
  FormReport r = check_text(std::string(kHeader) +
                            "let k = \\x -> Cons A (f x) in case k of _ -> Cons A (f es)"
                            " where f = \\es -> Cons B (f es)");
  CHECK(!r.conforms);
  CHECK(has_rule(r, "case"));
}

TEST_CASE("call arguments must be variables") {
  FormReport r = check_text(std::string(kHeader) +
                            "Cons A (f (Cons A es)) where f = \\es -> Cons B (f es)");
  CHECK(!r.conforms);
  CHECK(has_rule(r, "call"));
}

TEST_CASE("other violations") {
  CHECK(has_rule(check_text(std::string(kHeader) + "Cons (f es) (f es) where f = \\x -> Cons A (f x)"),
                 "state"));
  CHECK(has_rule(check_text(std::string(kHeader) + "A"), "cons"));
  CHECK(has_rule(check_text(std::string(kHeader) + "Cons A es"), "apply"));
  CHECK(has_rule(check_text(std::string(kHeader) + "Cons A (f es es) where f = \\x -> Cons A (f x)"),
                 "call"));
  CHECK(has_rule(check_text(std::string(kHeader) + "let k = A in Cons A (k es)"), "let"));
  CHECK(has_rule(check_text(std::string(kHeader) + "Cons A (g es)"), "apply"));
}

TEST_CASE("let-bound variables may be applied") {
  FormReport r = check_text(std::string(kHeader) +
                            "let k = \\x -> Cons A (f x) in k (Cons B (f es))"
                            " where f = \\es -> Cons B (f es)");
  CHECK(r.conforms);
}

TEST_CASE("lenient state option") {
  SourceFile f = parse_program(std::string(kHeader) +
                               "Cons (f es) (f es) where f = \\x -> Cons A (f x)");
  REQUIRE(f.ok());
  FormOptions lenient;
  lenient.strict_state = false;
  CHECK(check_simplified(f.program, lenient).conforms);
  CHECK(!check_simplified(f.program).conforms);
}

TEST_CASE("random conforming programs only contain tail calls") {
  testing::Rng rng(41);
  testing::SystemConfig cfg;
  cfg.let_probability = 0.3;
  for (int i = 0; i < 300; ++i) {
    testing::RandomSystem sys = testing::random_system(rng, cfg);
    FormReport r = check_simplified(sys.program);
    REQUIRE(r.conforms);
    CHECK(only_tail_calls(sys.program, true));
  }
}

TEST_CASE("check_simplified is a pure predicate") {
  testing::Rng rng(42);
  for (int i = 0; i < 100; ++i) {
    TermPtr t = testing::random_term(rng, 4);
    FormReport a = check_simplified(t);
    FormReport b = check_simplified(t);
    CHECK(a.conforms == b.conforms);
    REQUIRE(a.violations.size() == b.violations.size());
    for (std::size_t k = 0; k < a.violations.size(); ++k) {
      CHECK(a.violations[k].path == b.violations[k].path);
      CHECK(a.violations[k].message == b.violations[k].message);
    }
    CHECK(a.conforms == a.violations.empty());
  }
}
