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

// Strong Kleene three-valued logic and the verdict algebra built on it.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsl/ast.hpp"

namespace rsl {

enum class TruthVal { True, False, Undefined };

TruthVal and3(TruthVal a, TruthVal b);
TruthVal or3(TruthVal a, TruthVal b);
TruthVal not3(TruthVal a);
TruthVal imp3(TruthVal a, TruthVal b);

inline constexpr TruthVal kAllTruthVals[] = {TruthVal::True, TruthVal::False,
                                             TruthVal::Undefined};

/// "True", "False" or "Undefined"; also the object-level constructor names.
const char* to_string(TruthVal v);
std::optional<TruthVal> truth_from_string(std::string_view s);

/// Information order: Undefined is below both True and False.
bool refines(TruthVal coarse, TruthVal fine);

using Trace = std::vector<TermPtr>;

bool trace_equal(const Trace& a, const Trace& b);

struct Verdict {
  TruthVal truth;
  Trace trace;
};

/// Which operand trace a binary verdict connective keeps.
enum class TraceSelection {
  /// Shortest trace among operands whose truth equals the result when that
  /// operand alone decides it (a False conjunct, a True disjunct, or an
  /// Undefined operand). When both operands are needed (True for a
  /// conjunction, False for a disjunction) the longer trace is kept. Ties go
  /// to the left operand.
  Evidence,
  /// Shortest trace among operands whose truth equals the result, in every
  /// case. Ties go to the left operand.
  Shortest,
};

enum class Connective { And, Or };

/// One binary verdict combination, reported to a CombineObserver.
struct Combination {
  Connective op;
  const Verdict& lhs;
  const Verdict& rhs;
  const Verdict& result;
};

using CombineObserver = std::function<void(const Combination&)>;

/// Verdict connectives under a fixed trace-selection policy.
class VerdictAlgebra {
 public:
  explicit VerdictAlgebra(TraceSelection sel = TraceSelection::Evidence,
                          CombineObserver observer = {})
      : sel_(sel), observer_(std::move(observer)) {}

  Verdict and_v(const Verdict& a, const Verdict& b) const;
  Verdict or_v(const Verdict& a, const Verdict& b) const;
  Verdict not_v(const Verdict& a) const;
  /// or_v(not_v(a), b).
  Verdict imp_v(const Verdict& a, const Verdict& b) const;

  TraceSelection selection() const { return sel_; }

 private:
  Verdict combine(Connective op, const Verdict& a, const Verdict& b) const;

  TraceSelection sel_;
  CombineObserver observer_;
};

Verdict and_v(const Verdict& a, const Verdict& b,
              TraceSelection sel = TraceSelection::Evidence);
Verdict or_v(const Verdict& a, const Verdict& b,
             TraceSelection sel = TraceSelection::Evidence);
Verdict not_v(const Verdict& a);
Verdict imp_v(const Verdict& a, const Verdict& b,
              TraceSelection sel = TraceSelection::Evidence);

}  // namespace rsl
