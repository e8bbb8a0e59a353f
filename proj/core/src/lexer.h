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

#ifndef TEAMSEM_SRC_LEXER_H_
#define TEAMSEM_SRC_LEXER_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "teamsem/errors.h"

namespace teamsem::internal {

enum class Tok {
  kIdent,     // x, E, inc, u'
  kConstant,  // 0, 12, 'a (text holds the element name)
  kLParen,
  kRParen,
  kLBracket,
  kRBracket,
  kLBrace,
  kRBrace,
  kComma,
  kSemicolon,
  kColon,
  kDot,
  kEq,
  kNeq,
  kBang,
  kOr,
  kAnd,
  kHook,
  kDiamond,
  kEnd,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  SourceSpan span;
};

// Byte offset base is added to every span.
std::vector<Token> tokenize(std::string_view text, std::size_t base = 0);

const char* describe(Tok kind);

bool is_ident_start(char c);
bool is_ident_char(char c);

}  // namespace teamsem::internal

#endif  // TEAMSEM_SRC_LEXER_H_
