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

// Shared helpers for loading corpus programs in tests.

#pragma once

#include <string>
#include <vector>

#include "rsl/corpus.hpp"
#include "rsl/parser.hpp"

namespace rsl::testing {

inline std::vector<CorpusEntry> corpus() { return load_corpus(RSL_TEST_CORPUS_DIR); }

inline LoadedEntry corpus_entry(const std::string& name) {
  for (const auto& e : corpus()) {
    if (e.name == name) return load_entry(e);
  }
  throw std::runtime_error("no corpus entry " + name);
}

inline std::vector<std::string> render(const std::vector<TermPtr>& states) {
  std::vector<std::string> out;
  for (const auto& s : states) out.push_back(pretty(s));
  return out;
}

inline const std::vector<std::string>& mutex_events() {
  static const std::vector<std::string> ev = {"Request1", "Request2", "Take1",
                                              "Take2",    "Release1", "Release2"};
  return ev;
}

}  // namespace rsl::testing
