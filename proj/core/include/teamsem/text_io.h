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

#ifndef TEAMSEM_TEXT_IO_H_
#define TEAMSEM_TEXT_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "teamsem/dependencies.h"
#include "teamsem/formula.h"
#include "teamsem/model.h"
#include "teamsem/team.h"

namespace teamsem {

// Formula grammar (loosest first; binary connectives associate to the right):
//
//   formula  := disj [ "=>" formula ]
//   disj     := conj [ "\/" disj ]
//   conj     := unary [ "/\" conj ]
//   unary    := "<>" unary | ("exists" | "forall") ident+ "." unary | primary
//   primary  := "(" formula ")" | "top" | "!" "top" | "!" ident "(" terms ")"
//             | ident "(" terms [ ";" terms ] ")"
//             | "[" ident ":" [ terms ] "]" "{" formula "}"
//             | term ("=" | "!=") term
//   term     := ident | constant
//
// Names registered in the registry parse as dependency atoms, other names
// as relation literals. Constants are digit-leading tokens or a quote
// followed by a name ('a). Throws ParseError.
Formula parse_formula(std::string_view text, const Registry& registry);
Formula parse_formula(std::string_view text);

std::string print_formula(const Formula& f);

// "domain: a b c" then "rel NAME/ARITY: (a,b) ..." lines and optional
// "const NAME = ELEMENT" lines; '#' starts a comment. Single-element
// domains are accepted with a warning.
Model parse_model(std::string_view text,
                  std::vector<std::string>* warnings = nullptr);
std::string print_model(const Model& m);

// "vars: x y" then "row: a b" lines. Duplicate rows collapse.
Team parse_team(std::string_view text, const Model& m);
std::string print_team(const Team& t, const Model& m);
// Inline rendering such as {x=a y=b, x=b y=b}; {ε} style for {()}.
std::string format_team(const Team& t, const Model& m);

// "dep NAME/K := SENTENCE" lines. The sentence may only use the k-ary
// symbol R and equality and must be closed. Returns the extended registry.
Registry load_dependency_defs(std::string_view text, Registry registry);

}  // namespace teamsem

#endif  // TEAMSEM_TEXT_IO_H_
