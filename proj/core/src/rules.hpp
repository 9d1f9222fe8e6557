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

// Helpers shared by the verification and witness rule interpreters.

#pragma once

#include <string>
#include <vector>

#include "rsl/verify.hpp"

namespace rsl::detail {

/// Counts one rule application against the budget.
void tick(CheckContext& ctx);

/// Body of `name` with its parameters renamed to `args`.
TermPtr unfold(const std::string& name, const std::vector<TermPtr>& args,
               const FunEnv& env);

/// Per-alternative fairness. A wildcard is fair when some constructor it
/// stands for is fair.
std::vector<bool> fair_alternatives(const node::Case& c, const DataTable& data,
                                    const FairSet& fair);

/// Value of `atom` with the state variable bound to `state`.
TruthVal eval_atom(const TermPtr& atom, const TermPtr& state,
                   const CheckContext& ctx);

/// Result for a call that is already on the current path.
TruthVal revisit_value(FormulaKind k);

bool is_connective(FormulaKind k);

}  // namespace rsl::detail
