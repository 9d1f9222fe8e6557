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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rsl::detail {

enum class Tok {
  Lower,
  Upper,
  Underscore,
  Backslash,
  Arrow,
  LParen,
  RParen,
  LBrace,
  RBrace,
  Bar,
  Equals,
  Comma,
  Colon,
  Bang,
  AndAnd,
  OrOr,
  Implies,
  KwCase,
  KwOf,
  KwLet,
  KwIn,
  KwWhere,
  KwData,
  KwProp,
  KwFair,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int col;
};

struct SyntaxError : std::runtime_error {
  SyntaxError(int l, int c, const std::string& msg)
      : std::runtime_error(msg), line(l), col(c) {}
  int line;
  int col;
};

/// Splits source text into tokens. The final token is always Tok::End.
std::vector<Token> tokenize(std::string_view text);

const char* describe(Tok kind);

}  // namespace rsl::detail
