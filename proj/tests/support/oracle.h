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


// Reference implementations used as test oracles. They follow the
// definitions literally and are only meant for tiny models and teams.

#ifndef TEAMSEM_TESTS_SUPPORT_ORACLE_H_
#define TEAMSEM_TESTS_SUPPORT_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "teamsem/dependencies.h"
#include "teamsem/formula.h"
#include "teamsem/model.h"
#include "teamsem/structures.h"
#include "teamsem/team.h"

namespace teamsem::oracle {

using Rows = std::set<Assignment>;

Rows rows_of(const Team& t);
Team team_of(const std::vector<std::string>& vars, const Rows& rows);

// Tarskian truth; symbol/relation interpret one extra relation symbol.
bool tarski(const Model& m, const Assignment& s, const Formula& f,
            const std::string& symbol = {},
            const std::set<Tuple>* relation = nullptr);

// Lax team semantics by exhaustive enumeration of covers, choice sets and
// subteams.
bool satisfies(const Model& m, const Rows& x, const Formula& f,
               const Registry& registry);

std::set<Tuple> projection(const Model& m, const Rows& x, const Terms& terms);

// All permutations of the domain preserving every relation, by filtering
// the full symmetric group.
std::vector<Permutation> brute_automorphisms(const Model& m);

// Breadth-first search over the symmetric closure of E.
bool connected(const Model& m);

// Closure of a team under the given permutations, applied to every row.
Rows close(const Rows& x, const std::vector<Permutation>& perms);

struct GenOptions {
  int depth = 3;
  std::vector<std::string> free;              // variables allowed free
  std::vector<std::string> bound{"x", "y", "z"};
  // Dependency atoms drawn as leaves: name with arity; empty for FO only.
  std::vector<std::pair<std::string, std::size_t>> deps;
  bool negative_literals = true;
  bool hooks = false;      // FO-antecedent hooks as a connective
  bool diamonds = false;
  double quantifier_weight = 0.35;
};

// Random NNF formula over E/2 and equality.
Formula random_formula(std::mt19937_64& rng, const GenOptions& options);
Formula random_fo_literal(std::mt19937_64& rng,
                          const std::vector<std::string>& scope,
                          bool negative);

}  // namespace teamsem::oracle

#endif  // TEAMSEM_TESTS_SUPPORT_ORACLE_H_
