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

#ifndef TEAMSEM_FORMULA_OPS_H_
#define TEAMSEM_FORMULA_OPS_H_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "teamsem/formula.h"

namespace teamsem {

// Variables occurring outside the scope of their quantifier. Variables of
// hook antecedents count; the sentence of a GenericDep contributes nothing.
std::set<std::string> free_vars(const Formula& f);

// Every variable name occurring anywhere outside GenericDep sentences.
std::set<std::string> all_vars(const Formula& f);

// No DepAtom, GenericDep, Hook or Diamond.
bool is_first_order(const Formula& f);
bool is_quantifier_free(const Formula& f);
bool is_sentence(const Formula& f);
bool contains_kind(const Formula& f, FormulaKind kind);

// NNF of the classical negation. Throws FormulaError on non-first-order input.
Formula nnf_negate(const Formula& theta);

// Alpha-renames binders so that no variable is bound twice and no variable is
// both bound and free. A clashing binder v becomes v1, v2, ... (the first
// unused suffix).
Formula rename_apart(const Formula& f);

// n names base1, base2, ... skipping names in avoid.
std::vector<std::string> fresh_vars(std::size_t n,
                                    const std::set<std::string>& avoid,
                                    std::string_view base = "q");

// base itself when unused, otherwise base followed by the first unused suffix.
std::string fresh_name(std::string_view base,
                       const std::set<std::string>& avoid);

// Renames free occurrences according to renaming (variable to variable).
Formula rename_free(const Formula& f,
                    const std::map<std::string, std::string>& renaming);

// Occurrences of dependency atoms per name. GenericDep atoms count under
// "[R]" where R is their relation symbol.
std::map<std::string, std::size_t> dependency_counts(const Formula& f);

// Universal quantifiers outside hook antecedents.
std::size_t universal_count(const Formula& f);

// Relation symbols used in literals, with the arity of their first use.
std::map<std::string, std::size_t> relation_symbols(const Formula& f);

}  // namespace teamsem

#endif  // TEAMSEM_FORMULA_OPS_H_
