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

#include <stdexcept>

#include "rsl/ast.hpp"

namespace rsl {
namespace {
constexpr const char* kListType = "List";
constexpr const char* kTruthType = "TruthVal";
}  // namespace

DataTable::DataTable() {
  add(DataDecl{kListType, {"a"}, {{"Nil", {}}, {"Cons", {"a", "(List a)"}}}});
  add(DataDecl{kTruthType, {}, {{"True", {}}, {"False", {}}, {"Undefined", {}}}});
}

void DataTable::add(DataDecl decl) {
  if (find_type(decl.name)) {
    throw std::invalid_argument("duplicate datatype " + decl.name);
  }
  for (std::size_t i = 0; i < decl.ctors.size(); ++i) {
    const auto& c = decl.ctors[i].name;
    if (ctor_type_.count(c)) {
      throw std::invalid_argument("duplicate constructor " + c);
    }
    for (std::size_t k = 0; k < i; ++k) {
      if (decl.ctors[k].name == c) {
        throw std::invalid_argument("duplicate constructor " + c);
      }
    }
  }
  for (const auto& c : decl.ctors) ctor_type_[c.name] = decls_.size();
  decls_.push_back(std::move(decl));
}

int DataTable::arity(const std::string& con) const {
  auto it = ctor_type_.find(con);
  if (it == ctor_type_.end()) return -1;
  for (const auto& c : decls_[it->second].ctors) {
    if (c.name == con) return c.arity();
  }
  return -1;
}

const DataDecl* DataTable::type_of(const std::string& con) const {
  auto it = ctor_type_.find(con);
  return it == ctor_type_.end() ? nullptr : &decls_[it->second];
}

const DataDecl* DataTable::find_type(const std::string& name) const {
  for (const auto& d : decls_) {
    if (d.name == name) return &d;
  }
  return nullptr;
}

std::vector<DataDecl> DataTable::user_decls() const {
  std::vector<DataDecl> out;
  for (const auto& d : decls_) {
    if (!is_builtin_type(d.name)) out.push_back(d);
  }
  return out;
}

std::vector<std::string> DataTable::event_constructors() const {
  std::vector<std::string> out;
  if (const auto* d = find_type(kEventType)) {
    for (const auto& c : d->ctors) out.push_back(c.name);
  }
  return out;
}

std::vector<std::string> DataTable::all_constructors() const {
  std::vector<std::string> out;
  for (const auto& d : decls_) {
    for (const auto& c : d.ctors) out.push_back(c.name);
  }
  return out;
}

bool DataTable::is_builtin_type(const std::string& name) {
  return name == kListType || name == kTruthType;
}

}  // namespace rsl
