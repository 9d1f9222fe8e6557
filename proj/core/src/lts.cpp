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

#include "rsl/lts.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "rsl/normform.hpp"
#include "rsl/parser.hpp"

namespace rsl {

bool LtsEdge::accepts(const std::string& event) const {
  if (label != kWildcardLabel) return label == event;
  return std::find(residual.begin(), residual.end(), event) != residual.end();
}

std::size_t Lts::edge_count(bool include_self_loops) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [&](const LtsEdge& e) {
        return include_self_loops || !e.self_loop();
      }));
}

const LtsNode* Lts::node_of(const std::string& fun) const {
  for (const auto& n : nodes) {
    if (n.fun == fun) return &n;
  }
  return nullptr;
}

namespace {

// Matches Cons state (g v) and returns the state and g, checking that v is
// the expected variable.
std::pair<TermPtr, std::string> emission(const TermPtr& t, const std::string& rest,
                                         const std::string& where) {
  const auto* c = t->as<node::Con>();
  if (!c || c->name != "Cons") {
    throw NotReactiveShape(where + ": expected a Cons cell");
  }
  const TermPtr& state = c->args[0];
  if (!state->closed() || !is_state_term(state)) {
    throw NotReactiveShape(where + ": emitted state must be a closed constructor term");
  }
  Spine s = spine(c->args[1]);
  const auto* g = s.head->as<node::Call>();
  const node::Var* v = s.args.size() == 1 ? s.args[0]->as<node::Var>() : nullptr;
  if (!g || !v || (!rest.empty() && v->name != rest)) {
    throw NotReactiveShape(where + ": the tail must call a function on the " +
                           "remaining events");
  }
  return {state, g->name};
}

}  // namespace

Lts extract_lts(const TermPtr& program, const DataTable& data) {
  const auto* w = program->as<node::Where>();
  if (!w) throw NotReactiveShape("program must be a where expression");
  Lts lts;
  std::map<std::string, std::size_t> ids;
  for (const auto& d : w->defs) {
    ids[d.name] = lts.nodes.size();
    lts.nodes.push_back(LtsNode{lts.nodes.size(), d.name, nullptr});
  }
  auto target = [&](const std::string& fun, const TermPtr& state,
                    const std::string& where) {
    auto it = ids.find(fun);
    if (it == ids.end()) throw NotReactiveShape(where + ": unknown function " + fun);
    auto& node = lts.nodes[it->second];
    if (!node.state) {
      node.state = state;
    } else if (!equal(node.state, state)) {
      throw InconsistentNodeState("transitions into " + fun + " emit both " +
                                  pretty(node.state) + " and " + pretty(state));
    }
    return it->second;
  };

  auto [init_state, init_fun] = emission(w->body, "", "program body");
  lts.initial = target(init_fun, init_state, "program body");

  for (const auto& d : w->defs) {
    const std::string where = "function " + d.name;
    LambdaChain ch = lambda_chain(d.body);
    if (ch.params.size() != 1) {
      throw NotReactiveShape(where + " must take exactly the event list");
    }
    const auto* outer = ch.body->as<node::Case>();
    const node::Var* es = outer ? outer->scrutinee->as<node::Var>() : nullptr;
    if (!es || es->name != ch.params[0] || outer->alts.size() != 1 ||
        outer->alts[0].pattern.con != "Cons") {
      throw NotReactiveShape(where + " must case on its event list with a " +
                             "single Cons alternative");
    }
    const Pattern& cell = outer->alts[0].pattern;
    const auto* inner = outer->alts[0].body->as<node::Case>();
    const node::Var* ev = inner ? inner->scrutinee->as<node::Var>() : nullptr;
    if (!ev || ev->name != cell.vars[0]) {
      throw NotReactiveShape(where + " must case on the next event");
    }

    std::vector<std::string> universe = data.event_constructors();
    for (const auto& alt : inner->alts) {
      if (alt.pattern.is_wildcard()) continue;
      if (const auto* type = data.type_of(alt.pattern.con)) {
        universe.clear();
        for (const auto& c : type->ctors) universe.push_back(c.name);
      }
      break;
    }

    std::vector<std::string> matched;
    for (const auto& alt : inner->alts) {
      auto [state, fun] = emission(alt.body, cell.vars[1], where);
      LtsEdge e{ids[d.name], alt.pattern.is_wildcard() ? kWildcardLabel
                                                       : alt.pattern.con,
                target(fun, state, where), {}};
      if (alt.pattern.is_wildcard()) {
        for (const auto& u : universe) {
          if (std::find(matched.begin(), matched.end(), u) == matched.end()) {
            e.residual.push_back(u);
          }
        }
      } else {
        matched.push_back(alt.pattern.con);
      }
      lts.edges.push_back(std::move(e));
    }
  }

  for (const auto& n : lts.nodes) {
    if (!n.state) {
      throw NotReactiveShape("function " + n.fun + " is never entered, so it " +
                             "has no observable state");
    }
  }
  return lts;
}

std::vector<TermPtr> walk(const Lts& lts, const std::vector<std::string>& events) {
  std::size_t cur = lts.initial;
  std::vector<TermPtr> out{lts.nodes[cur].state};
  for (const auto& ev : events) {
    const LtsEdge* next = nullptr;
    for (const auto& e : lts.edges) {
      if (e.from == cur && e.accepts(ev)) {
        next = &e;
        break;
      }
    }
    if (!next) {
      throw LtsError("no transition from " + lts.nodes[cur].fun + " on " + ev);
    }
    cur = next->to;
    out.push_back(lts.nodes[cur].state);
  }
  return out;
}

namespace {

std::string node_label(const LtsNode& n) {
  std::string out = n.fun + "\\n";
  const auto* c = n.state->as<node::Con>();
  if (!c || c->args.empty()) return out + pretty(n.state);
  for (std::size_t i = 0; i < c->args.size(); ++i) {
    if (i) out += " ";
    out += "s" + std::to_string(i + 1) + "=" + pretty(c->args[i]);
  }
  return out;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const Lts& lts, bool include_self_loops) {
  std::ostringstream os;
  os << "digraph lts {\n";
  os << "  node [shape=box];\n";
  for (const auto& n : lts.nodes) {
    os << "  n" << n.id << " [label=\"" << escape(node_label(n)) << "\""
       << (n.id == lts.initial ? ", peripheries=2" : "") << "];\n";
  }
  for (const auto& e : lts.edges) {
    if (!include_self_loops && e.self_loop()) continue;
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << escape(e.label)
       << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::ordered_json state_to_json(const TermPtr& state) {
  if (const auto* c = state->as<node::Con>()) {
    nlohmann::ordered_json args = nlohmann::ordered_json::array();
    for (const auto& a : c->args) args.push_back(state_to_json(a));
    return {{"con", c->name}, {"args", args}};
  }
  return {{"term", pretty(state)}};
}

nlohmann::ordered_json to_json(const Lts& lts, bool include_self_loops) {
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (const auto& n : lts.nodes) {
    nodes.push_back({{"id", n.id}, {"fun", n.fun}, {"state", state_to_json(n.state)}});
  }
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& e : lts.edges) {
    if (!include_self_loops && e.self_loop()) continue;
    nlohmann::ordered_json j = {{"from", e.from}, {"label", e.label}, {"to", e.to}};
    if (e.label == kWildcardLabel) j["residual"] = e.residual;
    edges.push_back(std::move(j));
  }
  return {{"initial", lts.initial}, {"nodes", nodes}, {"edges", edges}};
}

}  // namespace rsl
