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

#ifndef TEAMSEM_WELL_FORMED_H_
#define TEAMSEM_WELL_FORMED_H_

#include <string>
#include <vector>

#include "teamsem/dependencies.h"
#include "teamsem/formula.h"

namespace teamsem {

struct Diagnostic {
  std::string message;
  // The offending subformula, printed.
  std::string subformula;
};

struct WellFormedness {
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
  explicit operator bool() const { return ok(); }
  std::string to_string() const;
};

// Relation arities against sig, constants known to sig, dependency atoms
// registered with matching arity, hook antecedents first-order, GenericDep
// sentences closed and first-order over sig plus their relation symbol.
WellFormedness well_formed(const Formula& f, const Signature& sig,
                           const Registry& registry);

}  // namespace teamsem

#endif  // TEAMSEM_WELL_FORMED_H_
