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

#include "lexer.hpp"

#include <cctype>
#include <map>

namespace rsl::detail {
namespace {

const std::map<std::string, Tok, std::less<>>& keywords() {
  static const std::map<std::string, Tok, std::less<>> kw = {
      {"case", Tok::KwCase}, {"of", Tok::KwOf},       {"let", Tok::KwLet},
      {"in", Tok::KwIn},     {"where", Tok::KwWhere}, {"data", Tok::KwData},
      {"prop", Tok::KwProp}, {"fair", Tok::KwFair},
  };
  return kw;
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const int tl = line;
    const int tc = col;
    auto emit = [&](Tok k, std::size_t len) {
      out.push_back(Token{k, std::string(text.substr(i, len)), tl, tc});
      advance(len);
    };
    auto next_is = [&](char d) { return i + 1 < text.size() && text[i + 1] == d; };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string_view word = text.substr(i, j - i);
      if (word == "_") {
        emit(Tok::Underscore, 1);
      } else if (auto it = keywords().find(word); it != keywords().end()) {
        emit(it->second, word.size());
      } else if (std::isupper(static_cast<unsigned char>(c))) {
        emit(Tok::Upper, word.size());
      } else if (c == '_') {
        throw SyntaxError(tl, tc, "identifier may not start with '_'");
      } else {
        emit(Tok::Lower, word.size());
      }
      continue;
    }
    switch (c) {
      case '\\': emit(Tok::Backslash, 1); continue;
      case '(': emit(Tok::LParen, 1); continue;
      case ')': emit(Tok::RParen, 1); continue;
      case '{': emit(Tok::LBrace, 1); continue;
      case '}': emit(Tok::RBrace, 1); continue;
      case ',': emit(Tok::Comma, 1); continue;
      case ':': emit(Tok::Colon, 1); continue;
      case '!': emit(Tok::Bang, 1); continue;
      case '-':
        if (next_is('>')) { emit(Tok::Arrow, 2); continue; }
        break;
      case '=':
        if (next_is('>')) { emit(Tok::Implies, 2); continue; }
        emit(Tok::Equals, 1);
        continue;
      case '&':
        if (next_is('&')) { emit(Tok::AndAnd, 2); continue; }
        break;
      case '|':
        if (next_is('|')) { emit(Tok::OrOr, 2); continue; }
        emit(Tok::Bar, 1);
        continue;
      default:
        break;
    }
    throw SyntaxError(tl, tc, std::string("unexpected character '") + c + "'");
  }
  out.push_back(Token{Tok::End, "", line, col});
  return out;
}

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::Lower: return "identifier";
    case Tok::Upper: return "constructor";
    case Tok::Underscore: return "'_'";
    case Tok::Backslash: return "'\\'";
    case Tok::Arrow: return "'->'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Bar: return "'|'";
    case Tok::Equals: return "'='";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Bang: return "'!'";
    case Tok::AndAnd: return "'&&'";
    case Tok::OrOr: return "'||'";
    case Tok::Implies: return "'=>'";
    case Tok::KwCase: return "'case'";
    case Tok::KwOf: return "'of'";
    case Tok::KwLet: return "'let'";
    case Tok::KwIn: return "'in'";
    case Tok::KwWhere: return "'where'";
    case Tok::KwData: return "'data'";
    case Tok::KwProp: return "'prop'";
    case Tok::KwFair: return "'fair'";
    case Tok::End: return "end of input";
  }
  return "token";
}

}  // namespace rsl::detail
