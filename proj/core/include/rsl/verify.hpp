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

// Three-valued LTL verification of simplified-form programs.

#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>

#include "rsl/ast.hpp"
#include "rsl/eval.hpp"
#include "rsl/kleene.hpp"
#include "rsl/normform.hpp"

namespace rsl {

/// Functions already unfolded on the current path.
using VisitedSet = std::set<std::string>;
/// Event constructors assumed to occur infinitely often.
using FairSet = std::set<std::string>;

inline constexpr std::size_t kDefaultRuleBudget = 1'000'000;

struct CheckOptions {
  /// Upper bound on rule applications for one verify or generate call.
  std::size_t max_rule_applications = kDefaultRuleBudget;
  /// Step budget for evaluating a single atom.
  std::size_t atom_fuel = kDefaultFuel;
  /// Trace policy for generate; verify ignores it.
  TraceSelection selection = TraceSelection::Evidence;
  /// Called on every binary verdict combination made by generate.
  CombineObserver observer;
  FormOptions form;
};

/// Per-run state shared by the rule interpreters.
struct CheckContext {
  CheckContext(const DataTable& d, FairSet f, CheckOptions o = {})
      : data(d), fair(std::move(f)), options(std::move(o)) {}

  const DataTable& data;
  FairSet fair;
  CheckOptions options;
  std::size_t rule_applications = 0;
};

class CheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotSimplified : public CheckError {
 public:
  explicit NotSimplified(FormReport report);
  const FormReport& report() const { return report_; }

 private:
  FormReport report_;
};

/// An atom evaluated to something other than True, False or Undefined.
class AtomError : public CheckError {
 public:
  using CheckError::CheckError;
};

/// The expression matched no rule; only possible outside simplified form.
class RuleMismatch : public CheckError {
 public:
  using CheckError::CheckError;
};

class RuleBudgetExceeded : public CheckError {
 public:
  explicit RuleBudgetExceeded(std::size_t budget);
};

TruthVal prove(const TermPtr& t, const FormulaPtr& f, const FunEnv& env,
               const VisitedSet& visited, CheckContext& ctx);

/// Checks simplified form, then proves `f` from empty environments.
/// Throws NotSimplified.
TruthVal verify(const TermPtr& program, const FormulaPtr& f, CheckContext& ctx);
TruthVal verify(const TermPtr& program, const FormulaPtr& f, const FairSet& fair,
                const DataTable& data, const CheckOptions& opts = {});

}  // namespace rsl
