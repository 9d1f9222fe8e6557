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

#include "rsl/ltlsem.hpp"

#include <algorithm>

namespace rsl {
namespace {

bool atom_holds(const TermPtr& atom, const TermPtr& state, std::size_t fuel) {
  TermPtr v = eval_whnf(substitute(atom, {{kStateVar, state}}), FunEnv{}, fuel);
  const auto* c = v->as<node::Con>();
  if (c && c->args.empty()) {
    if (c->name == "True") return true;
    if (c->name == "False") return false;
    if (c->name == "Undefined") throw AtomUndefined("atom evaluated to Undefined");
  }
  throw SemanticsError("atom did not evaluate to a truth value");
}

class LassoModel {
 public:
  LassoModel(const Lasso& m, std::size_t fuel) : m_(m), fuel_(fuel) {}

  bool sat(std::size_t i, const FormulaPtr& f) const {
    i = canonical(i);
    switch (f->kind) {
      case FormulaKind::Atom: return atom_holds(f->atom, state(i), fuel_);
      case FormulaKind::Not: return !sat(i, f->lhs);
      case FormulaKind::And: return sat(i, f->lhs) && sat(i, f->rhs);
      case FormulaKind::Or: return sat(i, f->lhs) || sat(i, f->rhs);
      case FormulaKind::Implies: return !sat(i, f->lhs) || sat(i, f->rhs);
      case FormulaKind::Next: return sat(i + 1, f->lhs);
      case FormulaKind::Always:
        for (std::size_t j = i; j < horizon(i); ++j) {
          if (!sat(j, f->lhs)) return false;
        }
        return true;
      case FormulaKind::Eventually:
        for (std::size_t j = i; j < horizon(i); ++j) {
          if (sat(j, f->lhs)) return true;
        }
        return false;
    }
    return false;
  }

 private:
  // Every position reachable from i is congruent to one below this bound.
  std::size_t horizon(std::size_t i) const {
    return std::max(i, m_.prefix.size()) + m_.loop.size();
  }
  std::size_t canonical(std::size_t i) const {
    std::size_t p = m_.prefix.size();
    return i < p ? i : p + (i - p) % m_.loop.size();
  }
  const TermPtr& state(std::size_t i) const {
    std::size_t p = m_.prefix.size();
    return i < p ? m_.prefix[i] : m_.loop[i - p];
  }

  const Lasso& m_;
  std::size_t fuel_;
};

Bounded from_truth(TruthVal v) {
  switch (v) {
    case TruthVal::True: return Bounded::Sat;
    case TruthVal::False: return Bounded::Unsat;
    default: return Bounded::Unknown;
  }
}

TruthVal bounded(const Trace& t, const FormulaPtr& f, std::size_t i,
                 std::size_t fuel) {
  switch (f->kind) {
    case FormulaKind::Atom:
      if (i >= t.size()) return TruthVal::Undefined;
      return atom_holds(f->atom, t[i], fuel) ? TruthVal::True : TruthVal::False;
    case FormulaKind::Not: return not3(bounded(t, f->lhs, i, fuel));
    case FormulaKind::And:
      return and3(bounded(t, f->lhs, i, fuel), bounded(t, f->rhs, i, fuel));
    case FormulaKind::Or:
      return or3(bounded(t, f->lhs, i, fuel), bounded(t, f->rhs, i, fuel));
    case FormulaKind::Implies:
      return imp3(bounded(t, f->lhs, i, fuel), bounded(t, f->rhs, i, fuel));
    case FormulaKind::Next: return bounded(t, f->lhs, i + 1, fuel);
    case FormulaKind::Always: {
      TruthVal acc = TruthVal::Undefined;
      for (std::size_t j = i; j < t.size(); ++j) {
        acc = and3(acc, bounded(t, f->lhs, j, fuel));
      }
      return acc;
    }
    case FormulaKind::Eventually: {
      TruthVal acc = TruthVal::Undefined;
      for (std::size_t j = i; j < t.size(); ++j) {
        acc = or3(acc, bounded(t, f->lhs, j, fuel));
      }
      return acc;
    }
  }
  return TruthVal::Undefined;
}

// Shares evaluation between event sequences with a common prefix. The unread
// part of the event list is a placeholder variable; when evaluation gets stuck
// on it the enumerator branches on the next event, and once the depth is used
// up it becomes Nil, exactly as in run_trace.
class TraceEnumerator {
 public:
  TraceEnumerator(const std::vector<std::string>& events, std::size_t max_states,
                  std::vector<Trace>& out)
      : events_(events), max_states_(max_states), out_(out) {}

  void run(const TermPtr& program) {
    TermPtr cur;
    if (program->is<node::Lam>()) {
      cur = app(program, var(kRest));
    } else if (program->free_vars.size() == 1) {
      cur = substitute(program, {{*program->free_vars.begin(), var(kRest)}});
    } else if (program->free_vars.empty()) {
      cur = program;
    } else {
      throw std::invalid_argument(
          "program must take the event list as its only free variable");
    }
    Trace states;
    go(cur, states, max_states_ - 1);
  }

 private:
  static constexpr const char* kRest = "$rest";

  void go(TermPtr cur, Trace& states, std::size_t events_left) {
    const std::size_t mark = states.size();
    while (states.size() < max_states_) {
      Fuel fuel(kDefaultFuel);
      TermPtr w;
      try {
        w = eval_whnf(cur, FunEnv{}, fuel);
      } catch (const StuckError& e) {
        if (e.detail().reason != std::string("free variable ") + kRest) {
          if (e.detail().unmatched == "Nil" && !states.empty()) break;
          throw;
        }
        if (events_left == 0) {
          cur = substitute(cur, {{kRest, con("Nil")}});
          continue;
        }
        for (const auto& ev : events_) {
          go(substitute(cur, {{kRest, con("Cons", {con(ev), var(kRest)})}}), states,
             events_left - 1);
        }
        states.resize(mark);
        return;
      }
      const auto* c = w->as<node::Con>();
      if (c && c->name == "Nil") break;
      if (!c || c->name != "Cons") {
        throw NonConsOutput("program output is not a Cons cell: " +
                            std::string(c ? c->name : "lambda"));
      }
      states.push_back(eval_deep(c->args[0], FunEnv{}, fuel));
      cur = c->args[1];
    }
    // Sequences that differ only in unread events give the same trace.
    std::size_t copies = 1;
    for (std::size_t i = 0; i < events_left; ++i) copies *= events_.size();
    out_.insert(out_.end(), copies, states);
    states.resize(mark);
  }

  const std::vector<std::string>& events_;
  std::size_t max_states_;
  std::vector<Trace>& out_;
};

}  // namespace

bool sat_lasso(const Lasso& m, std::size_t i, const FormulaPtr& f,
               std::size_t fuel) {
  if (m.loop.empty()) throw std::invalid_argument("lasso loop must be nonempty");
  return LassoModel(m, fuel).sat(i, f);
}

const char* to_string(Bounded b) {
  switch (b) {
    case Bounded::Sat: return "Sat";
    case Bounded::Unsat: return "Unsat";
    default: return "Unknown";
  }
}

Bounded bounded_check(const Trace& t, const FormulaPtr& f, std::size_t i,
                      std::size_t fuel) {
  return from_truth(bounded(t, f, i, fuel));
}

std::vector<Trace> enumerate_traces(const TermPtr& program,
                                    const std::vector<std::string>& events,
                                    std::size_t depth) {
  if (depth > kMaxEnumerationDepth) {
    throw DepthTooLarge("enumeration depth " + std::to_string(depth) +
                        " exceeds the limit of " +
                        std::to_string(kMaxEnumerationDepth));
  }
  if (events.empty() && depth > 0) return {};
  std::vector<Trace> out;
  TraceEnumerator(events, depth + 1, out).run(program);
  return out;
}

std::vector<Trace> enumerate_traces(const TermPtr& program, const DataTable& data,
                                    std::size_t depth) {
  return enumerate_traces(program, data.event_constructors(), depth);
}

}  // namespace rsl
