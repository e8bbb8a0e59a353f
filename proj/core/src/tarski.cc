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

// Reference Tarskian evaluator. Deliberately direct: it is the oracle the
// team evaluator is tested against.

#include <optional>

#include "teamsem/errors.h"
#include "teamsem/semantics.h"

namespace teamsem {

namespace {

Element term_value(const Model& m, const Assignment& s, const Term& t) {
  if (t.is_variable()) {
    auto it = s.find(t.name);
    if (it == s.end()) throw EvalError("unbound variable '" + t.name + "'");
    return it->second;
  }
  auto e = m.constant(t.name);
  if (!e) throw EvalError("unresolvable constant '" + t.name + "'");
  return *e;
}

bool tarski(const Model& m, const std::optional<Expansion>& ex, Assignment& s,
            const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::kLiteral: {
      bool value = true;
      switch (f.literal_kind()) {
        case LiteralKind::kTruth:
          value = true;
          break;
        case LiteralKind::kEquality:
          value = term_value(m, s, f.terms()[0]) ==
                  term_value(m, s, f.terms()[1]);
          break;
        case LiteralKind::kRelation: {
          const Relation* r = nullptr;
          if (ex && ex->symbol == f.name()) {
            r = ex->relation;
          } else {
            r = m.relation(f.name());
          }
          if (r == nullptr) {
            throw EvalError("unknown relation '" + f.name() + "'");
          }
          if (r->arity() != f.terms().size()) {
            throw EvalError("arity mismatch for '" + f.name() + "'");
          }
          Tuple t;
          for (const auto& term : f.terms()) t.push_back(term_value(m, s, term));
          value = r->contains(t);
          break;
        }
      }
      return f.negated() ? !value : value;
    }
    case FormulaKind::kAnd:
      return tarski(m, ex, s, f.lhs()) && tarski(m, ex, s, f.rhs());
    case FormulaKind::kOr:
      return tarski(m, ex, s, f.lhs()) || tarski(m, ex, s, f.rhs());
    case FormulaKind::kExists:
    case FormulaKind::kForall: {
      const bool universal = f.is(FormulaKind::kForall);
      std::optional<Element> saved;
      if (auto it = s.find(f.var()); it != s.end()) saved = it->second;
      bool result = universal;
      for (std::size_t e = 0; e < m.size(); ++e) {
        s[f.var()] = static_cast<Element>(e);
        const bool v = tarski(m, ex, s, f.body());
        if (universal && !v) {
          result = false;
          break;
        }
        if (!universal && v) {
          result = true;
          break;
        }
      }
      if (saved) {
        s[f.var()] = *saved;
      } else {
        s.erase(f.var());
      }
      return result;
    }
    default:
      throw FormulaError("eval_tarski: formula is not first-order");
  }
}

}  // namespace

bool eval_tarski(const Model& m, const Assignment& s, const Formula& theta,
                 const std::optional<Expansion>& expansion) {
  Assignment copy = s;
  return tarski(m, expansion, copy, theta);
}

}  // namespace teamsem
