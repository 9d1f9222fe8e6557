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

// Reference satisfaction relation for LTL over lasso-shaped traces, a
// finite-prefix approximation of it, and brute-force trace enumeration.
// Nothing here depends on the verification rules.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsl/ast.hpp"
#include "rsl/eval.hpp"
#include "rsl/kleene.hpp"

namespace rsl {

/// The infinite trace prefix · loop · loop · ...
struct Lasso {
  Trace prefix;
  Trace loop;
};

class SemanticsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An atom evaluated to Undefined, which the two-valued relation rejects.
class AtomUndefined : public SemanticsError {
 public:
  using SemanticsError::SemanticsError;
};

class DepthTooLarge : public SemanticsError {
 public:
  using SemanticsError::SemanticsError;
};

/// Whether position `i` of the lasso satisfies `f`. The loop must be nonempty.
bool sat_lasso(const Lasso& m, std::size_t i, const FormulaPtr& f,
               std::size_t fuel = kDefaultFuel);

enum class Bounded { Sat, Unsat, Unknown };

const char* to_string(Bounded b);

/// Evaluates `f` on a finite prefix. Sat and Unsat hold for every infinite
/// extension of the prefix; Unknown means the prefix does not decide.
Bounded bounded_check(const Trace& t, const FormulaPtr& f, std::size_t i,
                      std::size_t fuel = kDefaultFuel);

inline constexpr std::size_t kMaxEnumerationDepth = 8;

/// Runs `program` on every sequence in events^depth and returns the traces
/// in lexicographic order of the event sequences.
std::vector<Trace> enumerate_traces(const TermPtr& program,
                                    const std::vector<std::string>& events,
                                    std::size_t depth);

/// Same, with the constructors of the program's Event type.
std::vector<Trace> enumerate_traces(const TermPtr& program, const DataTable& data,
                                    std::size_t depth);

}  // namespace rsl
