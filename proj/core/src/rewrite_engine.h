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


#ifndef TEAMSEM_SRC_REWRITE_ENGINE_H_
#define TEAMSEM_SRC_REWRITE_ENGINE_H_

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "teamsem/rewrite.h"

namespace teamsem::internal {

struct RuleHit {
  std::string rule;
  Formula after;
  std::vector<std::string> fresh;
};

// Rules see the node and the set of names in use; fresh names they pick must
// be reported in RuleHit::fresh.
using Rule = std::function<std::optional<RuleHit>(
    const Formula& node, const std::set<std::string>& used)>;

enum class Order { kPre, kPost };

struct EngineOptions {
  Order order = Order::kPre;
  bool enter_antecedents = false;
  std::size_t max_steps = 200000;
};

// Applies rule at the first matching position (in the given order) until no
// position matches, recording every step.
Formula rewrite_fixpoint(const Formula& f, const Rule& rule,
                         const EngineOptions& options, RewriteTrace& trace);

// Records a whole-subformula replacement at path.
Formula record_step(const Formula& f, const Path& path, std::string rule,
                    Formula after, std::vector<std::string> fresh,
                    RewriteTrace& trace);

}  // namespace teamsem::internal

#endif  // TEAMSEM_SRC_REWRITE_ENGINE_H_
