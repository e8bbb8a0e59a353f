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

#include <optional>

#include "lexer.h"
#include "teamsem/errors.h"
#include "teamsem/text_io.h"

namespace teamsem {

namespace {

using internal::Tok;
using internal::Token;

class Parser {
 public:
  Parser(std::vector<Token> tokens, const Registry& registry)
      : tokens_(std::move(tokens)), registry_(registry) {}

  Formula parse_all() {
    Formula f = formula();
    expect(Tok::kEnd);
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& what, const Token& t) const {
    throw ParseError(what + ", found " + describe(t), t.span);
  }
  static std::string describe(const Token& t) {
    if (t.kind == Tok::kIdent) return "'" + t.text + "'";
    if (t.kind == Tok::kConstant) return "constant '" + t.text + "'";
    return internal::describe(t.kind);
  }

  const Token& expect(Tok kind) {
    if (!at(kind)) {
      fail(std::string("expected ") + internal::describe(kind), peek());
    }
    return advance();
  }

  bool is_keyword(const Token& t, const char* word) const {
    return t.kind == Tok::kIdent && t.text == word;
  }

  Formula formula() {
    Formula lhs = disjunction();
    if (at(Tok::kHook)) {
      advance();
      return Formula::hook(lhs, formula());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    if (at(Tok::kOr)) {
      advance();
      return Formula::disj(lhs, disjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    if (at(Tok::kAnd)) {
      advance();
      return Formula::conj(lhs, conjunction());
    }
    return lhs;
  }

  Formula unary() {
    if (at(Tok::kDiamond)) {
      advance();
      return Formula::diamond(unary());
    }
    const Token& t = peek();
    if (is_keyword(t, "exists") || is_keyword(t, "forall")) {
      const bool universal = t.text == "forall";
      advance();
      std::vector<std::string> vars;
      while (at(Tok::kIdent) && !is_reserved(peek().text)) {
        vars.push_back(advance().text);
      }
      if (vars.empty()) fail("expected a variable after the quantifier", peek());
      expect(Tok::kDot);
      Formula body = unary();
      return universal ? forall_all(vars, body) : exists_all(vars, body);
    }
    return primary();
  }

  static bool is_reserved(const std::string& s) {
    return s == "exists" || s == "forall" || s == "top";
  }

  Term term() {
    const Token& t = peek();
    if (t.kind == Tok::kConstant) {
      advance();
      return Term::constant(t.text);
    }
    if (t.kind == Tok::kIdent && !is_reserved(t.text)) {
      advance();
      return Term::var(t.text);
    }
    fail("expected a term", t);
  }

  // Comma-separated terms, possibly empty, up to a closing token or ';'.
  Terms term_list(Tok close) {
    Terms out;
    if (at(close) || at(Tok::kSemicolon)) return out;
    out.push_back(term());
    while (at(Tok::kComma)) {
      advance();
      out.push_back(term());
    }
    return out;
  }

  Formula primary() {
    const Token& t = peek();
    if (t.kind == Tok::kLParen) {
      advance();
      Formula f = formula();
      expect(Tok::kRParen);
      return f;
    }
    if (is_keyword(t, "top")) {
      advance();
      return Formula::truth();
    }
    if (t.kind == Tok::kBang) {
      advance();
      if (is_keyword(peek(), "top")) {
        advance();
        return Formula::truth(true);
      }
      if (peek().kind != Tok::kIdent || peek(1).kind != Tok::kLParen) {
        fail("expected 'top' or a relation after '!'", peek());
      }
      const Token name = advance();
      if (registry_.has_name(name.text)) {
        throw ParseError("dependency atoms cannot be negated", name.span);
      }
      advance();
      Terms args = term_list(Tok::kRParen);
      expect(Tok::kRParen);
      return Formula::relation(name.text, std::move(args), true);
    }
    if (t.kind == Tok::kLBracket) return generic();
    if (t.kind == Tok::kIdent && !is_reserved(t.text) &&
        peek(1).kind == Tok::kLParen) {
      const Token name = advance();
      advance();
      Terms args = term_list(Tok::kRParen);
      std::optional<std::size_t> split;
      if (at(Tok::kSemicolon)) {
        const Token semi = advance();
        split = args.size();
        Terms rest = term_list(Tok::kRParen);
        args.insert(args.end(), rest.begin(), rest.end());
        if (!registry_.has_name(name.text)) {
          throw ParseError("';' is only allowed in dependency atoms",
                           semi.span);
        }
      }
      expect(Tok::kRParen);
      if (registry_.has_name(name.text)) {
        return Formula::dep(name.text, std::move(args), split);
      }
      if (args.empty()) {
        throw ParseError("relation '" + name.text + "' needs arguments",
                         name.span);
      }
      return Formula::relation(name.text, std::move(args));
    }
    Term lhs = term();
    if (at(Tok::kEq) || at(Tok::kNeq)) {
      const bool negated = advance().kind == Tok::kNeq;
      Term rhs = term();
      return Formula::equality(std::move(lhs), std::move(rhs), negated);
    }
    fail("expected '=' or '!=' after a term", peek());
  }

  Formula generic() {
    expect(Tok::kLBracket);
    const Token& sym = expect(Tok::kIdent);
    std::string symbol = sym.text;
    expect(Tok::kColon);
    Terms args = term_list(Tok::kRBracket);
    expect(Tok::kRBracket);
    expect(Tok::kLBrace);
    // The sentence lives over the model signature plus the symbol; nested
    // names are relations, never dependency atoms.
    Registry none;
    Parser inner(std::vector<Token>(tokens_.begin() + pos_, tokens_.end()),
                 none);
    Formula sentence = inner.formula();
    pos_ += inner.pos_;
    expect(Tok::kRBrace);
    return Formula::generic_dep(std::move(symbol), std::move(args),
                                std::move(sentence));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Registry& registry_;
};

}  // namespace

Formula parse_formula(std::string_view text, const Registry& registry) {
  return Parser(internal::tokenize(text), registry).parse_all();
}

Formula parse_formula(std::string_view text) {
  static const Registry* builtins = new Registry(builtin_registry());
  return parse_formula(text, *builtins);
}

}  // namespace teamsem
