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

// Verdict construction with counterexample and witness traces, and their
// validation against the reference semantics.

#pragma once

#include <optional>
#include <string>

#include "rsl/kleene.hpp"
#include "rsl/ltlsem.hpp"
#include "rsl/verify.hpp"

namespace rsl {

Verdict gen(const TermPtr& t, const FormulaPtr& f, const FunEnv& env,
            const VisitedSet& visited, const Trace& acc, CheckContext& ctx);

/// Checks simplified form, then runs gen from empty environments and an
/// empty trace. Throws NotSimplified.
Verdict generate(const TermPtr& program, const FormulaPtr& f, CheckContext& ctx);
Verdict generate(const TermPtr& program, const FormulaPtr& f, const FairSet& fair,
                 const DataTable& data, const CheckOptions& opts = {});

class EmptyTrace : public std::invalid_argument {
 public:
  EmptyTrace() : std::invalid_argument("cannot lassoify an empty trace") {}
};

/// Splits at the earliest earlier occurrence of the final state. Without a
/// repetition the whole trace is the prefix and the loop is empty.
Lasso lassoify(const Trace& t);

enum class Validation { Valid, Invalid, Inconclusive };

const char* to_string(Validation v);

struct ValidationReport {
  Validation result = Validation::Inconclusive;
  Lasso lasso;
  /// Finite-prefix evaluation of the whole trace, when atoms were defined.
  std::optional<Bounded> bounded;
  std::string note;
};

/// A nonempty loop is checked with sat_lasso. Otherwise a decisive
/// finite-prefix result settles the verdict, since it holds for every
/// extension. Undefined verdicts are always Inconclusive.
ValidationReport validate_verdict(const Verdict& v, const FormulaPtr& f,
                                  std::size_t fuel = kDefaultFuel);

}  // namespace rsl
