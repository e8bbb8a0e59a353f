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

#include "teamsem/well_formed.h"

#include <sstream>

#include "teamsem/formula_ops.h"
#include "teamsem/text_io.h"

namespace teamsem {

namespace {

class Checker {
 public:
  Checker(const Registry& registry, WellFormedness& out)
      : registry_(registry), out_(out) {}

  void check(const Formula& f, const Signature& sig) {
    switch (f.kind()) {
      case FormulaKind::kLiteral:
        check_terms(f, sig);
        if (f.literal_kind() == LiteralKind::kRelation) {
          auto it = sig.relations.find(f.name());
          if (it == sig.relations.end()) {
            report(f, "unknown relation '" + f.name() + "'");
          } else if (it->second != f.terms().size()) {
            report(f, "arity mismatch: '" + f.name() + "' has arity " +
                          std::to_string(it->second) + ", used with " +
                          std::to_string(f.terms().size()));
          }
        }
        return;
      case FormulaKind::kHook:
        if (!is_first_order(f.antecedent())) {
          report(f, "hook antecedent is not first-order");
        }
        check(f.antecedent(), sig);
        check(f.consequent(), sig);
        return;
      case FormulaKind::kDepAtom: {
        check_terms(f, sig);
        DependencyPtr d = registry_.lookup(f.name(), f.terms().size());
        if (!d) {
          if (registry_.has_name(f.name())) {
            report(f, "dependency '" + f.name() + "' is not defined at arity " +
                          std::to_string(f.terms().size()));
          } else {
            report(f, "unknown dependency '" + f.name() + "'");
          }
        } else if (f.split() && d->split && *f.split() != *d->split) {
          report(f, "separator position does not match dependency '" +
                        f.name() + "'");
        }
        return;
      }
      case FormulaKind::kGenericDep: {
        check_terms(f, sig);
        const Formula& s = f.sentence();
        if (!is_first_order(s)) {
          report(f, "generic dependency sentence is not first-order");
        }
        if (!is_sentence(s)) {
          report(f, "generic dependency sentence has free variables");
        }
        Signature inner = sig;
        inner.relations[f.name()] = f.terms().size();
        check(s, inner);
        return;
      }
      default:
        for (std::size_t i = 0; i < f.num_children(); ++i) {
          check(f.child(i), sig);
        }
    }
  }

 private:
  void check_terms(const Formula& f, const Signature& sig) {
    for (const auto& t : f.terms()) {
      if (t.is_constant() && !sig.constants.count(t.name)) {
        report(f, "unknown constant '" + t.name + "'");
      }
    }
  }

  void report(const Formula& f, std::string message) {
    out_.diagnostics.push_back({std::move(message), print_formula(f)});
  }

  const Registry& registry_;
  WellFormedness& out_;
};

}  // namespace

std::string WellFormedness::to_string() const {
  std::ostringstream os;
  for (const auto& d : diagnostics) {
    os << d.message << " in " << d.subformula << "\n";
  }
  return os.str();
}

WellFormedness well_formed(const Formula& f, const Signature& sig,
                           const Registry& registry) {
  WellFormedness out;
  Checker(registry, out).check(f, sig);
  return out;
}

}  // namespace teamsem
