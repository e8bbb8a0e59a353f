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


#ifndef TEAMSEM_EQUIVCHECK_H_
#define TEAMSEM_EQUIVCHECK_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "teamsem/dependencies.h"
#include "teamsem/formula.h"
#include "teamsem/model.h"
#include "teamsem/semantics.h"
#include "teamsem/team.h"

namespace teamsem {

// Models with domain {"0", ..., "size-1"}: every relation of sig ranges over
// all subsets, every constant of sig that is not an element name over all
// elements. Index order is deterministic.
std::uint64_t model_count(const Signature& sig, std::size_t size);
Model model_at(const Signature& sig, std::size_t size, std::uint64_t index);
// Throws BudgetExceeded past max_models.
std::vector<Model> enumerate_models(const Signature& sig, std::size_t size,
                                    std::uint64_t max_models = 1u << 20);

// All subsets of the |M|^|vars| assignments, the empty team first.
std::uint64_t team_count(const Model& m, const std::vector<std::string>& vars);
Team team_at(const Model& m, const std::vector<std::string>& vars,
             std::uint64_t index);
std::vector<Team> enumerate_teams(const Model& m,
                                  const std::vector<std::string>& vars,
                                  std::uint64_t max_teams = 1u << 20);

struct EquivOptions {
  std::vector<std::size_t> sizes{2, 3};
  // Sizes below this are rejected; set to 1 to opt into one-element models.
  std::size_t min_size = 2;
  // Extra relation symbols; those of the formulas are always included.
  Signature signature;
  // Zero: exhaustive. Otherwise that many random (model, team) pairs per
  // size, and the verdict is never "equivalent".
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  std::uint64_t max_models = 1u << 20;
  std::uint64_t max_teams = 1u << 16;
  std::size_t threads = 1;
  EvalOptions eval;
};

struct Verdict {
  enum class Status { kEquivalent, kCounterexample, kNoCounterexample };
  Status status = Status::kEquivalent;
  std::optional<Model> model;
  std::optional<Team> team;
  bool first = false;   // truth value of the first formula on the pair
  bool second = false;  // truth value of the second formula on the pair
  std::uint64_t pairs_checked = 0;

  bool equivalent() const { return status == Status::kEquivalent; }
  bool counterexample() const { return status == Status::kCounterexample; }
  std::string summary() const;
};

// Throws Error when the free variables differ or a size is below min_size.
Verdict equivalent(const Formula& f1, const Formula& f2,
                   const Registry& registry, const EquivOptions& options = {});
Verdict equivalent(const Formula& f1, const Formula& f2,
                   const EquivOptions& options = {});

}  // namespace teamsem

#endif  // TEAMSEM_EQUIVCHECK_H_
