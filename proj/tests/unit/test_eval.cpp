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

#include <map>
#include <random>
#include <tuple>

#include "fixtures.hpp"
#include "rsl/eval.hpp"
#include "rsl/parser.hpp"

using namespace rsl;

namespace {

// Transition table of example1: for each
// node, (event, target) pairs; unlisted events are self-loops. Node states
// are written as two-letter strings.
struct Table {
  std::map<std::string, std::string> state;
  std::map<std::string, std::map<std::string, std::string>> next;
};

Table example1_table() {
  Table t;
  t.state = {{"f1", "T T"}, {"f2", "W T"}, {"f3", "T W"}, {"f4", "U T"}, {"f5", "W W"},
             {"f6", "T U"}, {"f7", "U W"}, {"f8", "W U"}, {"f9", "U U"}};
  t.next["f1"] = {{"Request1", "f2"}, {"Request2", "f3"}};
  t.next["f2"] = {{"Take1", "f4"}, {"Request2", "f5"}};
  t.next["f3"] = {{"Request1", "f5"}, {"Take2", "f6"}};
  t.next["f4"] = {{"Release1", "f1"}};
  t.next["f5"] = {{"Take1", "f7"}, {"Take2", "f8"}};
  t.next["f6"] = {{"Release2", "f1"}};
  t.next["f7"] = {{"Release1", "f3"}, {"Take2", "f9"}};
  t.next["f8"] = {{"Release2", "f2"}, {"Take1", "f9"}};
  t.next["f9"] = {{"Release1", "f6"}, {"Release2", "f4"}};
  return t;
}

std::vector<std::string> table_run(const Table& t, const std::vector<std::string>& evs) {
  std::string cur = "f1";
  std::vector<std::string> out{"ObsState " + t.state.at(cur)};
  for (const auto& e : evs) {
    const auto& m = t.next.at(cur);
    if (auto it = m.find(e); it != m.end()) cur = it->second;
    out.push_back("ObsState " + t.state.at(cur));
  }
  return out;
}

std::vector<std::vector<std::string>> all_sequences(std::size_t depth) {
  std::vector<std::vector<std::string>> out{{}};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<std::vector<std::string>> next;
    for (const auto& s : out) {
      for (const auto& e : testing::mutex_events()) {
        auto t = s;
        t.push_back(e);
        next.push_back(t);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("step examples") {
  auto r1 = step(app(lam("x", var("x")), con("A")), FunEnv{});
  REQUIRE(std::holds_alternative<Reduction>(r1));
  CHECK(std::get<Reduction>(r1).kind == ReductionKind::Beta);
  CHECK(equal(std::get<Reduction>(r1).result, con("A")));

  TermPtr list = con("Cons", {con("A"), con("Nil")});
  auto r2 = step(case_of(list, {Alt{Pattern{"Cons", {"h", "t"}}, var("h")}}), FunEnv{});
  REQUIRE(std::holds_alternative<Reduction>(r2));
  CHECK(std::get<Reduction>(r2).kind == ReductionKind::ConElim);
  CHECK(std::get<Reduction>(r2).label == "Cons");
  CHECK(equal(std::get<Reduction>(r2).result, con("A")));

  auto e = testing::corpus_entry("example1");
  FunEnv env = FunEnv{}.extended(e.source.program->as<node::Where>()->defs);
  auto r3 = step(call("f1"), env);
  REQUIRE(std::holds_alternative<Reduction>(r3));
  CHECK(std::get<Reduction>(r3).kind == ReductionKind::FunUnfold);
  CHECK(std::get<Reduction>(r3).label == "f1");
  CHECK(std::get<Reduction>(r3).result->is<node::Lam>());
  CHECK(equal(std::get<Reduction>(r3).result, *env.find("f1")));
}

TEST_CASE("values and stuck terms") {
  CHECK(std::holds_alternative<IsValue>(step(con("A"), FunEnv{})));
  CHECK(std::holds_alternative<IsValue>(step(lam("x", var("x")), FunEnv{})));
  CHECK(std::holds_alternative<Stuck>(step(var("x"), FunEnv{})));
  auto s = step(case_of(lam("x", var("x")), {Alt{Pattern::wildcard(), con("A")}}), FunEnv{});
  CHECK(std::holds_alternative<Stuck>(s));
  CHECK_THROWS_AS(eval_whnf(app(con("A"), con("A")), FunEnv{}), StuckError);
}

TEST_CASE("congruence, let and where") {
  TermPtr t = app(let_in("f", lam("x", var("x")), var("f")), con("A"));
  CHECK(equal(eval_whnf(t, FunEnv{}), con("A")));
  TermPtr w = where(app(call("g"), con("A")),
                    {FunDef{"g", lam("x", con("Cons", {var("x"), app(call("g"), var("x"))}))}});
  auto r = step(w, FunEnv{});
  REQUIRE(std::holds_alternative<Reduction>(r));
  CHECK(std::get<Reduction>(r).kind == ReductionKind::WhereBind);
  TermPtr v = eval_whnf(w, FunEnv{});
  CHECK(v->as<node::Con>()->name == "Cons");
}

TEST_CASE("eval_whnf on property atoms") {
  auto e = testing::corpus_entry("example1");
  FormulaPtr mutex = e.properties.find("mutex");
  TermPtr atom = mutex->lhs->atom;
  auto at = [&](const char* st) {
    return eval_whnf(substitute(atom, {{kStateVar, parse_term(st, e.source.data)}}), FunEnv{});
  };
  CHECK(equal(at("ObsState U U"), con("False")));
  CHECK(equal(at("ObsState T T"), con("True")));

  Fuel fuel(10);
  TermPtr v = con("A");
  CHECK(eval_whnf(v, FunEnv{}, fuel) == v);
  CHECK(fuel.used() == 0);
}

TEST_CASE("fuel exhaustion") {
  TermPtr loop = where(call("f"), {FunDef{"f", call("f")}});
  CHECK_THROWS_AS(eval_whnf(loop, FunEnv{}, 1000), FuelExhausted);
}

TEST_CASE("run_trace examples") {
  auto e = testing::corpus_entry("example1");
  TraceOptions cyc{true, 4};
  CHECK(testing::render(run_trace(e.source.program, {"Request1", "Take1", "Release1"}, cyc)) ==
        std::vector<std::string>{"ObsState T T", "ObsState W T", "ObsState U T", "ObsState T T"});
  TraceOptions two{false, 2};
  CHECK(testing::render(run_trace(e.source.program, {"Take1"}, two)) ==
        std::vector<std::string>{"ObsState T T", "ObsState T T"});
  for (const auto& entry : testing::corpus()) {
    LoadedEntry le = load_entry(entry);
    CHECK(testing::render(run_trace(le.source.program, {"Request2"}, {false, 1})) ==
          std::vector<std::string>{"ObsState T T"});
  }
}

TEST_CASE("run_trace matches the transcribed example1 table") {
  auto e = testing::corpus_entry("example1");
  Table t = example1_table();
  for (std::size_t depth = 0; depth <= 4; ++depth) {
    for (const auto& seq : all_sequences(depth)) {
      auto got = testing::render(run_trace(e.source.program, seq, {false, 100}));
      REQUIRE(got == table_run(t, seq));
    }
  }
}

TEST_CASE("one state per consumed event plus the initial state") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::size_t> pick(0, 5);
  for (const auto& entry : testing::corpus()) {
    LoadedEntry le = load_entry(entry);
    for (std::size_t depth = 0; depth <= 3; ++depth) {
      for (const auto& seq : all_sequences(depth)) {
        CHECK(run_trace(le.source.program, seq, {false, 100}).size() == depth + 1);
      }
    }
    for (int i = 0; i < 300; ++i) {
      std::vector<std::string> seq;
      std::size_t depth = 4 + i % 3;
      for (std::size_t k = 0; k < depth; ++k) seq.push_back(testing::mutex_events()[pick(rng)]);
      CHECK(run_trace(le.source.program, seq, {false, 100}).size() == depth + 1);
    }
  }
}

TEST_CASE("step preserves closedness and is deterministic") {
  auto e = testing::corpus_entry("example3");
  TermPtr cur = substitute(e.source.program,
                           {{"es", event_list({"Request1", "Request2", "Take1"}, true)}});
  for (int i = 0; i < 500; ++i) {
    StepResult a = step(cur, FunEnv{});
    StepResult b = step(cur, FunEnv{});
    REQUIRE(a.index() == b.index());
    if (!std::holds_alternative<Reduction>(a)) {
      // Descend into the tail of the output list.
      const auto* c = cur->as<node::Con>();
      REQUIRE(c);
      cur = c->args[1];
      continue;
    }
    CHECK(equal(std::get<Reduction>(a).result, std::get<Reduction>(b).result));
    cur = std::get<Reduction>(a).result;
    CHECK(cur->closed());
    CHECK(cur->free_calls.empty());
  }
}

TEST_CASE("run_trace errors") {
  CHECK_THROWS_AS(run_trace(con("A"), {}, {}), NonConsOutput);
  CHECK_THROWS_AS(run_trace(con("A"), {}, {true, 3}), std::invalid_argument);
  TermPtr two = con("Cons", {var("a"), var("b")});
  CHECK_THROWS_AS(run_trace(two, {}, {}), std::invalid_argument);
  TermPtr lam_prog = lam("es", con("Cons", {con("A"), con("Nil")}));
  CHECK(run_trace(lam_prog, {}, {false, 5}).size() == 1);
}
