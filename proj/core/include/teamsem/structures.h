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


#ifndef TEAMSEM_STRUCTURES_H_
#define TEAMSEM_STRUCTURES_H_

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "teamsem/formula.h"
#include "teamsem/model.h"
#include "teamsem/team.h"

namespace teamsem {

// Images of the domain elements, in domain order.
using Permutation = std::vector<Element>;

// Undirected graph as a symmetric E/2 over the given vertex names.
Model graph_model(std::vector<std::string> vertices,
                  const std::vector<std::pair<Element, Element>>& edges);

// Two cycles of length 2^(n+1), vertices c0_i and c1_i. Throws Error for
// n < 1.
Model graph_An(int n);
// One cycle of length 2^(n+2), vertices v_i. Throws Error for n < 1.
Model graph_Bn(int n);

// Bijections mapping every relation onto itself. Explicit constants are not
// required to be fixed. Throws BudgetExceeded past max_results.
std::vector<Permutation> automorphisms(const Model& m,
                                       std::size_t max_results = 1u << 20);

bool vertex_transitive(const Model& m);

// Cl(X): the images of X's assignments under every automorphism.
Team closure(const Team& x, const Model& m);
Team closure(const Team& x, const std::vector<Permutation>& automorphisms);

// Replaces every dependency atom whose name is in kinds by top.
Formula flatten(const Formula& f, const std::set<std::string>& kinds);

// exists x y. (const(y) /\ (forall z. (E(x,z) => inc(z ; x)) /\ x != y))
Formula nonconn_sentence();

// Connectivity of the symmetric closure of a binary relation.
bool is_connected(const Model& m, const std::string& relation = "E");

}  // namespace teamsem

#endif  // TEAMSEM_STRUCTURES_H_
