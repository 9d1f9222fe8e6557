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

#include "rsl/corpus.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace rsl {

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::filesystem::path default_corpus_dir() {
  if (const char* env = std::getenv("RSL_CORPUS_DIR"); env && *env) return env;
  return RSL_DEFAULT_CORPUS_DIR;
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_text_file(dir / "corpus.json"));
  } catch (const nlohmann::json::exception& e) {
    throw CorpusError(std::string("corpus.json: ") + e.what());
  }
  std::vector<CorpusEntry> out;
  try {
    const std::string props = doc.at("properties").get<std::string>();
    for (const auto& j : doc.at("entries")) {
      CorpusEntry e;
      e.name = j.at("name").get<std::string>();
      e.program = dir / j.at("program").get<std::string>();
      e.properties = dir / j.value("properties", props);
      e.note = j.value("note", "");
      for (const auto& [prop, v] : j.at("expected").items()) {
        auto tv = truth_from_string(v.get<std::string>());
        if (!tv) throw CorpusError(e.name + ": bad verdict for " + prop);
        e.expected[prop] = *tv;
      }
      if (j.contains("counterexamples")) {
        for (const auto& [prop, trace] : j.at("counterexamples").items()) {
          e.counterexamples[prop] = trace.get<std::vector<std::string>>();
        }
      }
      out.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw CorpusError(std::string("corpus.json: ") + e.what());
  }
  return out;
}

LoadedEntry load_entry(const CorpusEntry& entry) {
  LoadedEntry out{entry, parse_program(read_text_file(entry.program)), {}};
  if (!out.source.ok()) throw ParseError(out.source.diagnostics);
  out.properties =
      parse_properties(read_text_file(entry.properties), out.source.data);
  if (!out.properties.ok()) throw ParseError(out.properties.diagnostics);
  return out;
}

}  // namespace rsl
