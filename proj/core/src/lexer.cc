// Copyright 2026 The teamsem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lexer.h"

#include <cctype>

namespace teamsem::internal {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

const char* describe(Tok kind) {
  switch (kind) {
    case Tok::kIdent: return "identifier";
    case Tok::kConstant: return "constant";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kLBracket: return "'['";
    case Tok::kRBracket: return "']'";
    case Tok::kLBrace: return "'{'";
    case Tok::kRBrace: return "'}'";
    case Tok::kComma: return "','";
    case Tok::kSemicolon: return "';'";
    case Tok::kColon: return "':'";
    case Tok::kDot: return "'.'";
    case Tok::kEq: return "'='";
    case Tok::kNeq: return "'!='";
    case Tok::kBang: return "'!'";
    case Tok::kOr: return "'\\/'";
    case Tok::kAnd: return "'/\\'";
    case Tok::kHook: return "'=>'";
    case Tok::kDiamond: return "'<>'";
    case Tok::kEnd: return "end of input";
  }
  return "token";
}

std::vector<Token> tokenize(std::string_view text, std::size_t base) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto emit = [&](Tok kind, std::size_t begin, std::size_t end,
                  std::string s = {}) {
    out.push_back({kind, std::move(s), {base + begin, base + end}});
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    auto two = [&](const char* s) {
      return i + 1 < text.size() && text[i] == s[0] && text[i + 1] == s[1];
    };
    if (is_ident_start(c)) {
      while (i < text.size() && is_ident_char(text[i])) ++i;
      emit(Tok::kIdent, start, i, std::string(text.substr(start, i - start)));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && is_ident_char(text[i])) ++i;
      emit(Tok::kConstant, start, i,
           std::string(text.substr(start, i - start)));
      continue;
    }
    if (c == '\'') {
      ++i;
      while (i < text.size() && is_ident_char(text[i])) ++i;
      if (i == start + 1) {
        throw ParseError("expected a name after the quote",
                         {base + start, base + i});
      }
      emit(Tok::kConstant, start, i,
           std::string(text.substr(start + 1, i - start - 1)));
      continue;
    }
    if (two("\\/")) { i += 2; emit(Tok::kOr, start, i); continue; }
    if (two("/\\")) { i += 2; emit(Tok::kAnd, start, i); continue; }
    if (two("=>")) { i += 2; emit(Tok::kHook, start, i); continue; }
    if (two("<>")) { i += 2; emit(Tok::kDiamond, start, i); continue; }
    if (two("!=")) { i += 2; emit(Tok::kNeq, start, i); continue; }
    Tok kind = Tok::kEnd;
    switch (c) {
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      case '[': kind = Tok::kLBracket; break;
      case ']': kind = Tok::kRBracket; break;
      case '{': kind = Tok::kLBrace; break;
      case '}': kind = Tok::kRBrace; break;
      case ',': kind = Tok::kComma; break;
      case ';': kind = Tok::kSemicolon; break;
      case ':': kind = Tok::kColon; break;
      case '.': kind = Tok::kDot; break;
      case '=': kind = Tok::kEq; break;
      case '!': kind = Tok::kBang; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         {base + start, base + start + 1});
    }
    ++i;
    emit(kind, start, i);
  }
  emit(Tok::kEnd, text.size(), text.size());
  return out;
}

}  // namespace teamsem::internal
