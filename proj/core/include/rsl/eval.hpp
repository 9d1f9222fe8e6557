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

// Call-by-name small-step semantics and the reactive trace simulator.

#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rsl/ast.hpp"

namespace rsl {

inline constexpr std::size_t kDefaultFuel = 1'000'000;

/// Function definitions visible at a program point. Innermost scopes shadow.
class FunEnv {
 public:
  FunEnv() = default;

  /// A copy of this environment extended with `defs`.
  FunEnv extended(const std::vector<FunDef>& defs) const;
  /// Defining term of `name`, or nullptr.
  const TermPtr* find(const std::string& name) const;
  bool contains(const std::string& name) const { return find(name) != nullptr; }
  std::size_t size() const { return defs_.size(); }

 private:
  std::map<std::string, TermPtr> defs_;
};

enum class ReductionKind {
  FunUnfold,
  ConElim,
  Beta,
  /// Pushes where-bound definitions into a body that is not a local call.
  WhereBind,
};

struct Reduction {
  ReductionKind kind;
  std::string label;  // function or constructor name; empty for Beta
  TermPtr result;
};

struct IsValue {};

struct Stuck {
  std::string reason;
  /// Constructor of a case scrutinee that no alternative matched, if any.
  std::string unmatched;
};

using StepResult = std::variant<Reduction, IsValue, Stuck>;

StepResult step(const TermPtr& t, const FunEnv& env);

/// True for constructor applications and lambdas.
bool is_whnf(const TermPtr& t);

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FuelExhausted : public EvalError {
 public:
  explicit FuelExhausted(std::size_t fuel);
};

class StuckError : public EvalError {
 public:
  explicit StuckError(Stuck s);
  const Stuck& detail() const { return stuck_; }

 private:
  Stuck stuck_;
};

class NonConsOutput : public EvalError {
 public:
  explicit NonConsOutput(const std::string& what) : EvalError(what) {}
};

/// Shared step budget. Every successful step consumes one unit.
struct Fuel {
  explicit Fuel(std::size_t budget = kDefaultFuel) : limit(budget), left(budget) {}
  std::size_t limit;
  std::size_t left;
  std::size_t used() const { return limit - left; }
};

TermPtr eval_whnf(const TermPtr& t, const FunEnv& env, Fuel& fuel);
TermPtr eval_whnf(const TermPtr& t, const FunEnv& env,
                  std::size_t fuel = kDefaultFuel);

/// Evaluates to WHNF and then recursively evaluates constructor arguments.
TermPtr eval_deep(const TermPtr& t, const FunEnv& env, Fuel& fuel);

struct TraceOptions {
  bool cycle = false;
  std::size_t max_states = 16;
  /// Budget for each WHNF evaluation of the output list.
  std::size_t fuel = kDefaultFuel;
};

/// Encodes events as a `Cons` list. With `cycle`, the list repeats forever.
TermPtr event_list(const std::vector<std::string>& events, bool cycle);

/// Feeds `events` to `program` and collects the emitted states. The program
/// is either a lambda over the event list or a term whose single free
/// variable is the event list. Stops after `max_states` states or when the
/// event list runs out.
std::vector<TermPtr> run_trace(const TermPtr& program,
                               const std::vector<std::string>& events,
                               const TraceOptions& opts);

}  // namespace rsl
