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

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rsl/corpus.hpp"
#include "rsl/lts.hpp"
#include "rsl/ltlsem.hpp"
#include "rsl/normform.hpp"
#include "rsl/parser.hpp"
#include "rsl/verify.hpp"
#include "rsl/witness.hpp"

namespace rsl::cli {
namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::string props;
  std::vector<std::string> prop;
  std::vector<std::string> fair;
  bool fair_all = false;
  bool json = false;
  bool dot = false;
  bool keep_self_loops = false;
  bool lenient_state = false;
  std::string selection = "evidence";
  std::vector<std::string> events;
  bool cycle = false;
  std::size_t n = 16;
  std::size_t depth = 3;
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  std::size_t budget = kDefaultRuleBudget;
};

std::string join_diags(const std::vector<Diagnostic>& diags, const std::string& file) {
  std::string out;
  for (const auto& d : diags) out += file + ":" + d.str() + "\n";
  return out;
}

SourceFile load_program(const std::string& file) {
  SourceFile src = parse_program(read_text_file(file));
  if (!src.ok()) throw DataError(join_diags(src.diagnostics, file));
  return src;
}

fs::path find_props(const Options& o) {
  if (!o.props.empty()) return o.props;
  fs::path program(o.file);
  fs::path sibling = program;
  sibling.replace_extension(".ltl");
  if (fs::exists(sibling)) return sibling;
  std::vector<fs::path> found;
  fs::path dir = program.parent_path().empty() ? fs::path(".") : program.parent_path();
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.path().extension() == ".ltl") found.push_back(entry.path());
  }
  if (found.size() == 1) return found.front();
  throw UsageError("no property file given and none found next to " + o.file +
                   "; use --props");
}

PropertyFile load_props(const Options& o, const SourceFile& src) {
  fs::path path = find_props(o);
  PropertyFile pf = parse_properties(read_text_file(path), src.data);
  if (!pf.ok()) throw DataError(join_diags(pf.diagnostics, path.string()));
  return pf;
}

std::vector<NamedFormula> select_props(const Options& o, const PropertyFile& pf,
                                       bool single) {
  std::vector<NamedFormula> out;
  if (o.prop.empty()) {
    if (single && pf.properties.size() != 1) {
      throw UsageError("the property file defines " +
                       std::to_string(pf.properties.size()) +
                       " properties; choose one with --prop");
    }
    return pf.properties;
  }
  for (const auto& name : o.prop) {
    FormulaPtr f = pf.find(name);
    if (!f) throw UsageError("unknown property " + name);
    out.push_back(NamedFormula{name, f});
  }
  if (single && out.size() != 1) throw UsageError("give exactly one --prop");
  return out;
}

FairSet fairness(const Options& o, const SourceFile& src, const PropertyFile& pf) {
  if (o.fair_all) {
    auto ev = src.data.event_constructors();
    return FairSet(ev.begin(), ev.end());
  }
  if (o.fair.empty()) return pf.fair;
  FairSet out;
  for (const auto& name : o.fair) {
    if (src.data.arity(name) != 0) throw UsageError("unknown fairness constructor " + name);
    out.insert(name);
  }
  return out;
}

CheckOptions check_options(const Options& o) {
  CheckOptions c;
  c.max_rule_applications = o.budget;
  c.form.strict_state = !o.lenient_state;
  if (o.selection == "shortest") {
    c.selection = TraceSelection::Shortest;
  } else if (o.selection != "evidence") {
    throw UsageError("--selection must be evidence or shortest");
  }
  return c;
}

int truth_exit(TruthVal v) {
  switch (v) {
    case TruthVal::True: return kOk;
    case TruthVal::False: return kFalse;
    default: return kUndefined;
  }
}

json trace_json(const Trace& t) {
  json out = json::array();
  for (const auto& s : t) out.push_back(state_to_json(s));
  return out;
}

// ---- subcommands -----------------------------------------------------------

int cmd_check(const Options& o, std::ostream& out) {
  SourceFile src = load_program(o.file);
  FormOptions fo;
  fo.strict_state = !o.lenient_state;
  FormReport r = check_simplified(src.program, fo);
  if (o.json) {
    json v = json::array();
    for (const auto& x : r.violations) {
      v.push_back({{"path", x.path}, {"rule", x.rule}, {"message", x.message},
                   {"term", pretty(x.subterm)}});
    }
    out << json{{"conforms", r.conforms}, {"violations", v}}.dump(2) << "\n";
  } else if (r.conforms) {
    out << "conforms\n";
  } else {
    for (const auto& x : r.violations) {
      out << x.path << ": [" << x.rule << "] " << x.message << ": "
          << pretty(x.subterm) << "\n";
    }
  }
  return r.conforms ? kOk : kFalse;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SourceFile src = load_program(o.file);
  PropertyFile pf = load_props(o, src);
  FairSet fair = fairness(o, src, pf);
  auto props = select_props(o, pf, false);
  json results = json::array();
  bool any_false = false;
  bool any_undefined = false;
  for (const auto& p : props) {
    CheckContext ctx(src.data, fair, check_options(o));
    TruthVal v = verify(src.program, p.formula, ctx);
    any_false = any_false || v == TruthVal::False;
    any_undefined = any_undefined || v == TruthVal::Undefined;
    if (o.json) {
      results.push_back({{"property", p.name},
                         {"truth", to_string(v)},
                         {"ruleApplications", ctx.rule_applications}});
    } else if (props.size() == 1) {
      out << to_string(v) << "\n";
    } else {
      out << p.name << ": " << to_string(v) << "\n";
    }
  }
  if (o.json) out << json{{"program", o.file}, {"results", results}}.dump(2) << "\n";
  if (any_false) return kFalse;
  return any_undefined ? kUndefined : kOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
  SourceFile src = load_program(o.file);
  PropertyFile pf = load_props(o, src);
  FairSet fair = fairness(o, src, pf);
  NamedFormula p = select_props(o, pf, true).front();
  CheckContext ctx(src.data, fair, check_options(o));
  Verdict v = generate(src.program, p.formula, ctx);
  ValidationReport rep = validate_verdict(v, p.formula);
  if (o.json) {
    json j = {{"property", p.name},
              {"truth", to_string(v.truth)},
              {"trace", trace_json(v.trace)},
              {"lasso",
               {{"prefixLen", rep.lasso.prefix.size()},
                {"loopLen", rep.lasso.loop.size()}}},
              {"validation", to_string(rep.result)}};
    if (rep.bounded) j["bounded"] = to_string(*rep.bounded);
    if (!rep.note.empty()) j["note"] = rep.note;
    out << j.dump(2) << "\n";
  } else {
    out << to_string(v.truth) << "\n";
    for (const auto& s : rep.lasso.prefix) out << "  " << pretty(s) << "\n";
    if (!rep.lasso.loop.empty()) {
      out << "loop:\n";
      for (const auto& s : rep.lasso.loop) out << "  " << pretty(s) << "\n";
    }
    out << "validation: " << to_string(rep.result);
    if (!rep.note.empty()) out << " (" << rep.note << ")";
    out << "\n";
  }
  return truth_exit(v.truth);
}

int cmd_lts(const Options& o, std::ostream& out) {
  SourceFile src = load_program(o.file);
  Lts lts = extract_lts(src.program, src.data);
  if (o.json) {
    out << to_json(lts, o.keep_self_loops).dump(2) << "\n";
  } else {
    out << to_dot(lts, o.keep_self_loops);
  }
  return kOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  SourceFile src = load_program(o.file);
  for (const auto& e : o.events) {
    if (src.data.arity(e) != 0) throw UsageError("unknown event " + e);
  }
  TraceOptions topts;
  topts.cycle = o.cycle;
  topts.max_states = o.n;
  if (o.cycle && o.events.empty()) throw UsageError("--cycle needs --events");
  Trace t = run_trace(src.program, o.events, topts);
  if (o.json) {
    out << json{{"trace", trace_json(t)}}.dump(2) << "\n";
  } else {
    for (const auto& s : t) out << pretty(s) << "\n";
  }
  return kOk;
}

std::vector<std::vector<std::string>> sample_sequences(
    const std::vector<std::string>& events, std::size_t depth, std::size_t count,
    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, events.size() - 1);
  std::vector<std::vector<std::string>> out(count);
  for (auto& seq : out) {
    for (std::size_t i = 0; i < depth; ++i) seq.push_back(events[pick(rng)]);
  }
  return out;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  if (o.samples == 0 && o.depth > kMaxEnumerationDepth) {
    throw UsageError("--depth above " + std::to_string(kMaxEnumerationDepth) +
                     " needs --samples");
  }
  SourceFile src = load_program(o.file);
  PropertyFile pf = load_props(o, src);
  FairSet fair = fairness(o, src, pf);
  NamedFormula p = select_props(o, pf, true).front();
  CheckContext ctx(src.data, fair, check_options(o));
  TruthVal truth = verify(src.program, p.formula, ctx);
  CheckContext gctx(src.data, fair, check_options(o));
  Verdict v = generate(src.program, p.formula, gctx);
  ValidationReport rep = validate_verdict(v, p.formula);

  std::vector<Trace> traces;
  const auto events = src.data.event_constructors();
  if (o.samples > 0) {
    TraceOptions topts;
    topts.max_states = o.depth + 1;
    for (const auto& seq : sample_sequences(events, o.depth, o.samples, o.seed)) {
      traces.push_back(run_trace(src.program, seq, topts));
    }
  } else {
    traces = enumerate_traces(src.program, events, o.depth);
  }
  std::size_t sat = 0, unsat = 0, unknown = 0;
  for (const auto& t : traces) {
    switch (bounded_check(t, p.formula, 0)) {
      case Bounded::Sat: ++sat; break;
      case Bounded::Unsat: ++unsat; break;
      case Bounded::Unknown: ++unknown; break;
    }
  }
  bool mirror = v.truth == truth;
  bool sound = !(truth == TruthVal::True && unsat > 0);
  bool valid = rep.result != Validation::Invalid;
  bool ok = mirror && sound && valid;
  if (o.json) {
    out << json{{"property", p.name},
                {"verify", to_string(truth)},
                {"generate", to_string(v.truth)},
                {"validation", to_string(rep.result)},
                {"traces", traces.size()},
                {"depth", o.depth},
                {"bounded", {{"Sat", sat}, {"Unsat", unsat}, {"Unknown", unknown}}},
                {"consistent", ok}}
               .dump(2)
        << "\n";
  } else {
    out << "property:   " << p.name << "\n"
        << "verify:     " << to_string(truth) << "\n"
        << "generate:   " << to_string(v.truth)
        << (mirror ? "" : "  (disagrees with verify)") << "\n"
        << "validation: " << to_string(rep.result) << "\n"
        << "sampled:    " << traces.size() << " traces of depth " << o.depth
        << ": " << sat << " Sat, " << unsat << " Unsat, " << unknown
        << " Unknown\n"
        << "consistent: " << (ok ? "yes" : "no") << "\n";
  }
  return ok ? kOk : kFalse;
}

void add_props_flags(CLI::App* sub, Options& o) {
  sub->add_option("--props", o.props, "Property file (.ltl)");
  sub->add_option("--prop", o.prop, "Property name; repeatable");
  auto* fair = sub->add_option("--fair", o.fair, "Comma-separated fair events")
                   ->delimiter(',');
  sub->add_flag("--fair-all", o.fair_all, "Treat every Event constructor as fair")
      ->excludes(fair);
  sub->add_option("--budget", o.budget, "Rule application budget");
  sub->add_flag("--lenient-state", o.lenient_state,
                "Accept any term as the state of a Cons cell");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Model checker for reactive programs in simplified form", "rslcheck"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Check that a program is in simplified form");
  check->add_option("file", o.file)->required();
  check->add_flag("--json", o.json);
  check->add_flag("--lenient-state", o.lenient_state);

  auto* ver = app.add_subcommand("verify", "Verify LTL properties");
  ver->add_option("file", o.file)->required();
  add_props_flags(ver, o);
  ver->add_flag("--json", o.json);

  auto* wit = app.add_subcommand("witness", "Build a counterexample or witness trace");
  wit->add_option("file", o.file)->required();
  add_props_flags(wit, o);
  wit->add_flag("--json", o.json);
  wit->add_option("--selection", o.selection, "Trace selection: evidence or shortest");

  auto* lts = app.add_subcommand("lts", "Extract the labelled transition system");
  lts->add_option("file", o.file)->required();
  auto* dot = lts->add_flag("--dot", o.dot, "Graphviz output (default)");
  lts->add_flag("--json", o.json)->excludes(dot);
  lts->add_flag("--keep-self-loops", o.keep_self_loops);

  auto* sim = app.add_subcommand("simulate", "Run a program on an event list");
  sim->add_option("file", o.file)->required();
  sim->add_option("--events", o.events, "Comma-separated events")->delimiter(',');
  sim->add_flag("--cycle", o.cycle, "Repeat the event list forever");
  sim->add_option("-n", o.n, "Maximum number of states");
  sim->add_flag("--json", o.json);

  auto* ora = app.add_subcommand("oracle", "Cross-check a verdict against the reference semantics");
  ora->add_option("file", o.file)->required();
  add_props_flags(ora, o);
  ora->add_option("--depth", o.depth, "Event sequence length");
  ora->add_option("--samples", o.samples, "Sample this many random sequences instead of enumerating");
  ora->add_option("--seed", o.seed, "Random seed for --samples");
  ora->add_flag("--json", o.json);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(o, out);
    if (*ver) return cmd_verify(o, out);
    if (*wit) return cmd_witness(o, out);
    if (*lts) return cmd_lts(o, out);
    if (*sim) return cmd_simulate(o, out);
    return cmd_oracle(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FileError& e) {
    err << "error: " << e.what() << "\n";
    return kNoInput;
  } catch (const DataError& e) {
    err << e.what();
    return kDataError;
  } catch (const NotSimplified& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const AtomError& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const LtsError& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const EvalError& e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace rsl::cli
