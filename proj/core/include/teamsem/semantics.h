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

#ifndef TEAMSEM_SEMANTICS_H_
#define TEAMSEM_SEMANTICS_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "teamsem/dependencies.h"
#include "teamsem/formula.h"
#include "teamsem/model.h"
#include "teamsem/team.h"

namespace teamsem {

// An extra relation symbol interpreted on top of a model, as in M[X(t)/R].
// It shadows a model relation of the same name.
struct Expansion {
  std::string symbol;
  const Relation* relation = nullptr;
};

// Tarskian truth of a first-order formula under s.
bool eval_tarski(const Model& m, const Assignment& s, const Formula& theta,
                 const std::optional<Expansion>& expansion = std::nullopt);

// X restricted to the assignments satisfying theta.
Team restrict(const Model& m, const Team& x, const Formula& theta);
// X[M/v]; v is overwritten when already in dom(X).
Team duplicate(const Model& m, const Team& x, const std::string& v);
// X[H/v] for a single variable; h(s) must be a nonempty set of elements.
Team supplement(const Model& m, const Team& x, const std::string& v,
                const std::function<std::vector<Element>(const Assignment&)>& h);
// X[H/v1..vk] for a tuple; h(s) must be a nonempty set of k-tuples.
Team supplement(const Model& m, const Team& x,
                const std::vector<std::string>& vs,
                const std::function<std::vector<Tuple>(const Assignment&)>& h);
// X(t): the relation of evaluated term tuples.
Relation project(const Team& x, const Terms& terms, const Model& m);

struct Budget {
  // Largest team any rule may build.
  std::size_t max_team_rows = std::size_t{1} << 20;
  // Enumerated candidates (covers, choice functions, subteams) per eval call.
  std::uint64_t max_branches = 200'000'000;
  std::size_t max_depth = 4096;
  // Zero means no deadline.
  std::chrono::milliseconds timeout{0};
};

struct EvalOptions {
  Budget budget;
  // Union-closed subformulas are decided through their maximal satisfying
  // subteam instead of by enumeration.
  bool union_closed_strategy = true;
  // Partitions instead of covers, singleton choices instead of lax choice
  // sets, singleton witnesses for diamonds.
  bool downward_pruning = true;
  // Upward-closed sides of a disjunction take the whole team; upward-closed
  // bodies of existentials take the full domain.
  bool upward_pruning = true;
  // Constant choices for exists v when the body has a const atom on a tuple
  // containing v, outside any disjunction, diamond, existential or proper
  // hook.
  bool constancy_guard = true;
  // A run of existentials whose variables occur only in equalities among
  // themselves chooses equality patterns instead of values.
  bool equality_blocks = true;
  // First-order subformulas, and hooks between them, are decided row by row,
  // by flatness.
  bool flat_first_order = true;
  // A formula whose only dependency atoms are const atoms is decided by
  // trying every constant for each atom occurrence, then row by row. Needs
  // flat_first_order.
  bool constancy_split = true;
  bool memoize = false;
  std::size_t memo_capacity = 1u << 18;
};

// Options with every pruning switched off: literal TS rules only.
EvalOptions plain_options();

struct EvalStats {
  std::uint64_t branches = 0;
  std::uint64_t memo_hits = 0;
  std::uint64_t nodes = 0;
};

// Compiles a formula against a model and registry once, then decides
// M |=_X f for many teams. Not thread-safe; use one per worker.
class Evaluator {
 public:
  Evaluator(const Model& m, const Formula& f, const Registry& registry,
            EvalOptions options = {});
  ~Evaluator();
  Evaluator(Evaluator&&) noexcept;
  Evaluator& operator=(Evaluator&&) noexcept;

  // Throws EvalError on unbound free variables, BudgetExceeded on caps.
  bool operator()(const Team& x);
  const EvalStats& stats() const;

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

bool eval(const Model& m, const Team& x, const Formula& f,
          const Registry& registry, const EvalOptions& options = {});

}  // namespace teamsem

#endif  // TEAMSEM_SEMANTICS_H_
