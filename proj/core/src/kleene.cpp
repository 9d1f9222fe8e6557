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

#include "rsl/kleene.hpp"

namespace rsl {

TruthVal and3(TruthVal a, TruthVal b) {
  if (a == TruthVal::False || b == TruthVal::False) return TruthVal::False;
  if (a == TruthVal::True && b == TruthVal::True) return TruthVal::True;
  return TruthVal::Undefined;
}

TruthVal or3(TruthVal a, TruthVal b) {
  if (a == TruthVal::True || b == TruthVal::True) return TruthVal::True;
  if (a == TruthVal::False && b == TruthVal::False) return TruthVal::False;
  return TruthVal::Undefined;
}

TruthVal not3(TruthVal a) {
  switch (a) {
    case TruthVal::True: return TruthVal::False;
    case TruthVal::False: return TruthVal::True;
    default: return TruthVal::Undefined;
  }
}

TruthVal imp3(TruthVal a, TruthVal b) { return or3(not3(a), b); }

const char* to_string(TruthVal v) {
  switch (v) {
    case TruthVal::True: return "True";
    case TruthVal::False: return "False";
    default: return "Undefined";
  }
}

std::optional<TruthVal> truth_from_string(std::string_view s) {
  for (TruthVal v : kAllTruthVals) {
    if (s == to_string(v)) return v;
  }
  return std::nullopt;
}

bool refines(TruthVal coarse, TruthVal fine) {
  return coarse == TruthVal::Undefined || coarse == fine;
}

bool trace_equal(const Trace& a, const Trace& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!equal(a[i], b[i])) return false;
  }
  return true;
}

Verdict VerdictAlgebra::combine(Connective op, const Verdict& a,
                                const Verdict& b) const {
  TruthVal r = op == Connective::And ? and3(a.truth, b.truth)
                                     : or3(a.truth, b.truth);
  const Verdict* pick;
  if (a.truth != r) {
    pick = &b;
  } else if (b.truth != r) {
    pick = &a;
  } else {
    TruthVal both_needed = op == Connective::And ? TruthVal::True : TruthVal::False;
    bool longest = sel_ == TraceSelection::Evidence && r == both_needed;
    if (longest) {
      pick = b.trace.size() > a.trace.size() ? &b : &a;
    } else {
      pick = b.trace.size() < a.trace.size() ? &b : &a;
    }
  }
  Verdict out{r, pick->trace};
  if (observer_) observer_(Combination{op, a, b, out});
  return out;
}

Verdict VerdictAlgebra::and_v(const Verdict& a, const Verdict& b) const {
  return combine(Connective::And, a, b);
}

Verdict VerdictAlgebra::or_v(const Verdict& a, const Verdict& b) const {
  return combine(Connective::Or, a, b);
}

Verdict VerdictAlgebra::not_v(const Verdict& a) const {
  return Verdict{not3(a.truth), a.trace};
}

Verdict VerdictAlgebra::imp_v(const Verdict& a, const Verdict& b) const {
  return or_v(not_v(a), b);
}

Verdict and_v(const Verdict& a, const Verdict& b, TraceSelection sel) {
  return VerdictAlgebra(sel).and_v(a, b);
}

Verdict or_v(const Verdict& a, const Verdict& b, TraceSelection sel) {
  return VerdictAlgebra(sel).or_v(a, b);
}

Verdict not_v(const Verdict& a) { return Verdict{not3(a.truth), a.trace}; }

Verdict imp_v(const Verdict& a, const Verdict& b, TraceSelection sel) {
  return VerdictAlgebra(sel).imp_v(a, b);
}

}  // namespace rsl
