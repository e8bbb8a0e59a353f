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

#ifndef TEAMSEM_DEPENDENCIES_H_
#define TEAMSEM_DEPENDENCIES_H_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "teamsem/formula.h"
#include "teamsem/model.h"
#include "teamsem/team.h"

namespace teamsem {

enum class FlagState { kUnknown, kAsserted, kRefuted };

const char* to_string(FlagState s);

struct ClosureFlags {
  FlagState downward_closed = FlagState::kUnknown;
  FlagState upward_closed = FlagState::kUnknown;
  FlagState union_closed = FlagState::kUnknown;
  FlagState empty_team = FlagState::kUnknown;

  bool dc() const { return downward_closed == FlagState::kAsserted; }
  bool upc() const { return upward_closed == FlagState::kAsserted; }
  bool uc() const { return union_closed == FlagState::kAsserted; }
  bool etp() const { return empty_team == FlagState::kAsserted; }
};

enum class DependencyKind {
  kConstancy,
  kTotality,
  kNonemptiness,
  kNonconstancy,
  kInclusion,
  kExclusion,
  kFunctional,
  kUserDefined,
};

// A dependency atom D: a first-order sentence over a fresh k-ary symbol R.
struct DependencySpec {
  std::string name;
  std::size_t arity = 0;
  std::string relation_symbol = "R";
  Formula sentence;
  ClosureFlags flags;
  DependencyKind kind = DependencyKind::kUserDefined;
  // Canonical ';' position for printing (inc/exc: arity/2, fdep: arity-1).
  std::optional<std::size_t> split;
};

using DependencyPtr = std::shared_ptr<const DependencySpec>;

// Dependencies keyed by (name, arity). Built-in families answer lookups at
// any valid arity; arities 1 to 3 are stored eagerly.
class Registry {
 public:
  Registry() = default;

  DependencyPtr lookup(std::string_view name, std::size_t arity) const;
  bool has_name(std::string_view name) const;
  std::vector<std::string> names() const;
  bool is_builtin(std::string_view name) const;

  // Throws Error when the name is already taken.
  void add(DependencySpec spec);

 private:
  friend Registry builtin_registry();

  std::map<std::pair<std::string, std::size_t>, DependencyPtr, std::less<>>
      specs_;
  std::map<std::string, DependencyKind, std::less<>> builtin_families_;
};

Registry builtin_registry();

// Builds the built-in spec for a family at an arity, or nullopt when the
// arity is invalid for it (inc/exc need even arity, fdep at least 2).
std::optional<DependencySpec> make_builtin(DependencyKind kind,
                                           std::size_t arity);

// Truth of d's sentence in m expanded with R := project(x, terms).
bool eval_dep(const Model& m, const Team& x, const DependencySpec& d,
              const Terms& terms);

struct FlagCheck {
  FlagState result = FlagState::kUnknown;
  // On refutation: model size and the teams involved, printed.
  std::size_t model_size = 0;
  std::vector<Team> witnesses;
  std::string explanation;
};

struct ClosureReport {
  std::string name;
  std::size_t arity = 0;
  std::size_t bound = 0;
  FlagCheck downward_closed;
  FlagCheck upward_closed;
  FlagCheck union_closed;
  FlagCheck empty_team;
};

// Exhaustive check over equality-only models of sizes 1..bound and all teams
// over arity variables. Throws BudgetExceeded when some size would need more
// than max_teams teams.
ClosureReport verify_closure_flags(const DependencySpec& d, std::size_t bound,
                                   std::size_t max_teams = 1u << 16);

}  // namespace teamsem

#endif  // TEAMSEM_DEPENDENCIES_H_
