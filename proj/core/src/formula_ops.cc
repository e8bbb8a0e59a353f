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

#include "teamsem/formula_ops.h"

#include <functional>

#include "teamsem/errors.h"

namespace teamsem {

namespace {

void collect_free(const Formula& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  auto add_terms = [&](const Terms& ts) {
    for (const auto& t : ts) {
      if (t.is_variable() && !bound.count(t.name)) out.insert(t.name);
    }
  };
  switch (f.kind()) {
    case FormulaKind::kLiteral:
    case FormulaKind::kDepAtom:
    case FormulaKind::kGenericDep:
      add_terms(f.terms());
      return;
    case FormulaKind::kExists:
    case FormulaKind::kForall: {
      const bool fresh = bound.insert(f.var()).second;
      collect_free(f.body(), bound, out);
      if (fresh) bound.erase(f.var());
      return;
    }
    default:
      for (std::size_t i = 0; i < f.num_children(); ++i) {
        collect_free(f.child(i), bound, out);
      }
  }
}

template <typename Fn>
void visit(const Formula& f, bool into_antecedents, const Fn& fn) {
  fn(f);
  for (std::size_t i = 0; i < f.num_children(); ++i) {
    if (!into_antecedents && f.is(FormulaKind::kHook) && i == 0) continue;
    visit(f.child(i), into_antecedents, fn);
  }
}

Terms rename_terms(const Terms& ts,
                   const std::map<std::string, std::string>& renaming) {
  Terms out = ts;
  for (auto& t : out) {
    if (!t.is_variable()) continue;
    auto it = renaming.find(t.name);
    if (it != renaming.end()) t.name = it->second;
  }
  return out;
}

Formula rebuild_with_terms(const Formula& f, Terms terms) {
  switch (f.kind()) {
    case FormulaKind::kLiteral:
      switch (f.literal_kind()) {
        case LiteralKind::kRelation:
          return Formula::relation(f.name(), std::move(terms), f.negated());
        case LiteralKind::kEquality:
          return Formula::equality(terms[0], terms[1], f.negated());
        case LiteralKind::kTruth:
          return f;
      }
      return f;
    case FormulaKind::kDepAtom:
      return Formula::dep(f.name(), std::move(terms), f.split());
    case FormulaKind::kGenericDep:
      return Formula::generic_dep(f.name(), std::move(terms), f.sentence());
    default:
      return f;
  }
}

class Renamer {
 public:
  explicit Renamer(const Formula& f)
      : used_(all_vars(f)), free_(free_vars(f)) {}

  Formula walk(const Formula& f, std::map<std::string, std::string> scope) {
    switch (f.kind()) {
      case FormulaKind::kLiteral:
      case FormulaKind::kDepAtom:
      case FormulaKind::kGenericDep:
        return rebuild_with_terms(f, rename_terms(f.terms(), scope));
      case FormulaKind::kExists:
      case FormulaKind::kForall: {
        std::string name = f.var();
        if (free_.count(name) || bound_.count(name)) {
          name = fresh_vars(1, used_, f.var())[0];
          used_.insert(name);
        }
        bound_.insert(name);
        scope[f.var()] = name;
        Formula body = walk(f.body(), scope);
        return f.is(FormulaKind::kExists) ? Formula::exists(name, body)
                                          : Formula::forall(name, body);
      }
      default: {
        Formula out = f;
        for (std::size_t i = 0; i < f.num_children(); ++i) {
          out = out.with_child(i, walk(f.child(i), scope));
        }
        return out;
      }
    }
  }

 private:
  std::set<std::string> used_;
  std::set<std::string> free_;
  std::set<std::string> bound_;
};

Formula rename_free_rec(const Formula& f,
                        const std::map<std::string, std::string>& renaming) {
  if (renaming.empty()) return f;
  switch (f.kind()) {
    case FormulaKind::kLiteral:
    case FormulaKind::kDepAtom:
    case FormulaKind::kGenericDep:
      return rebuild_with_terms(f, rename_terms(f.terms(), renaming));
    case FormulaKind::kExists:
    case FormulaKind::kForall: {
      if (!renaming.count(f.var())) {
        return f.with_child(0, rename_free_rec(f.body(), renaming));
      }
      auto inner = renaming;
      inner.erase(f.var());
      return f.with_child(0, rename_free_rec(f.body(), inner));
    }
    default: {
      Formula out = f;
      for (std::size_t i = 0; i < f.num_children(); ++i) {
        out = out.with_child(i, rename_free_rec(f.child(i), renaming));
      }
      return out;
    }
  }
}

}  // namespace

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> all_vars(const Formula& f) {
  std::set<std::string> out;
  visit(f, true, [&](const Formula& g) {
    if (g.is_quantifier()) out.insert(g.var());
    for (const auto& t : g.terms()) {
      if (t.is_variable()) out.insert(t.name);
    }
  });
  return out;
}

bool contains_kind(const Formula& f, FormulaKind kind) {
  bool found = false;
  visit(f, true, [&](const Formula& g) { found = found || g.is(kind); });
  return found;
}

bool is_first_order(const Formula& f) {
  bool fo = true;
  visit(f, true, [&](const Formula& g) {
    fo = fo && !g.is_atom() && !g.is(FormulaKind::kHook) &&
         !g.is(FormulaKind::kDiamond);
  });
  return fo;
}

bool is_quantifier_free(const Formula& f) {
  bool qf = true;
  visit(f, true, [&](const Formula& g) { qf = qf && !g.is_quantifier(); });
  return qf;
}

bool is_sentence(const Formula& f) { return free_vars(f).empty(); }

Formula nnf_negate(const Formula& theta) {
  switch (theta.kind()) {
    case FormulaKind::kLiteral:
      switch (theta.literal_kind()) {
        case LiteralKind::kRelation:
          return Formula::relation(theta.name(), theta.terms(),
                                   !theta.negated());
        case LiteralKind::kEquality:
          return Formula::equality(theta.terms()[0], theta.terms()[1],
                                   !theta.negated());
        case LiteralKind::kTruth:
          return Formula::truth(!theta.negated());
      }
      break;
    case FormulaKind::kAnd:
      return Formula::disj(nnf_negate(theta.lhs()), nnf_negate(theta.rhs()));
    case FormulaKind::kOr:
      return Formula::conj(nnf_negate(theta.lhs()), nnf_negate(theta.rhs()));
    case FormulaKind::kExists:
      return Formula::forall(theta.var(), nnf_negate(theta.body()));
    case FormulaKind::kForall:
      return Formula::exists(theta.var(), nnf_negate(theta.body()));
    default:
      break;
  }
  throw FormulaError("nnf_negate: input is not first-order");
}

Formula rename_apart(const Formula& f) {
  Renamer r(f);
  return r.walk(f, {});
}

std::vector<std::string> fresh_vars(std::size_t n,
                                    const std::set<std::string>& avoid,
                                    std::string_view base) {
  std::vector<std::string> out;
  for (std::size_t suffix = 1; out.size() < n; ++suffix) {
    std::string name = std::string(base) + std::to_string(suffix);
    if (!avoid.count(name)) out.push_back(std::move(name));
  }
  return out;
}

std::string fresh_name(std::string_view base,
                       const std::set<std::string>& avoid) {
  if (!avoid.count(std::string(base))) return std::string(base);
  return fresh_vars(1, avoid, base)[0];
}

Formula rename_free(const Formula& f,
                    const std::map<std::string, std::string>& renaming) {
  return rename_free_rec(f, renaming);
}

std::map<std::string, std::size_t> dependency_counts(const Formula& f) {
  std::map<std::string, std::size_t> out;
  visit(f, true, [&](const Formula& g) {
    if (g.is(FormulaKind::kDepAtom)) ++out[g.name()];
    if (g.is(FormulaKind::kGenericDep)) ++out["[" + g.name() + "]"];
  });
  return out;
}

std::size_t universal_count(const Formula& f) {
  std::size_t n = 0;
  visit(f, false, [&](const Formula& g) {
    if (g.is(FormulaKind::kForall)) ++n;
  });
  return n;
}

std::map<std::string, std::size_t> relation_symbols(const Formula& f) {
  std::map<std::string, std::size_t> out;
  std::function<void(const Formula&, const std::string*)> rec =
      [&](const Formula& g, const std::string* hidden) {
        visit(g, true, [&](const Formula& h) {
          if (h.is(FormulaKind::kLiteral) &&
              h.literal_kind() == LiteralKind::kRelation &&
              !(hidden && *hidden == h.name())) {
            out.emplace(h.name(), h.terms().size());
          }
          if (h.is(FormulaKind::kGenericDep)) rec(h.sentence(), &h.name());
        });
      };
  rec(f, nullptr);
  return out;
}

}  // namespace teamsem
