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

// The bundled example systems and their expected results.

#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsl/kleene.hpp"
#include "rsl/parser.hpp"

namespace rsl {

struct CorpusEntry {
  std::string name;
  std::filesystem::path program;
  std::filesystem::path properties;
  std::string note;
  /// Property name to expected verdict.
  std::map<std::string, TruthVal> expected;
  /// Property name to expected trace, each state rendered by pretty().
  std::map<std::string, std::vector<std::string>> counterexamples;
};

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::filesystem::path& path);

/// $RSL_CORPUS_DIR if set, else the corpus directory of the source tree.
std::filesystem::path default_corpus_dir();

/// Reads corpus.json from `dir`. Throws CorpusError on a malformed bundle.
std::vector<CorpusEntry> load_corpus(
    const std::filesystem::path& dir = default_corpus_dir());

struct LoadedEntry {
  CorpusEntry entry;
  SourceFile source;
  PropertyFile properties;
};

/// Parses the entry's program and property files. Throws ParseError.
LoadedEntry load_entry(const CorpusEntry& entry);

}  // namespace rsl
