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


#include "rewrite_engine.h"
#include "teamsem/errors.h"
#include "teamsem/formula_ops.h"
#include "teamsem/text_io.h"

namespace teamsem {

namespace {

bool is_guarded_hook(const Formula& f) {
  return f.is(FormulaKind::kHook) && f.consequent().is_atom();
}

bool flat_qf(const Formula& f) {
  return is_first_order(f) && is_quantifier_free(f);
}

void flatten_conj(const Formula& f, std::vector<Formula>& out) {
  if (f.is(FormulaKind::kAnd)) {
    flatten_conj(f.lhs(), out);
    flatten_conj(f.rhs(), out);
  } else {
    out.push_back(f);
  }
}

}  // namespace

Formula NormalFormView::to_formula() const {
  std::vector<Formula> parts;
  for (const auto& g : guarded) parts.push_back(Formula::hook(g.guard, g.atom));
  parts.push_back(matrix);
  Formula body = conjoin(parts);
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    body = forall_all(it->universals, exists_all(it->existentials, body));
  }
  return body;
}

std::vector<std::string> NormalFormView::prefix_vars() const {
  std::vector<std::string> out;
  for (const auto& b : blocks) {
    out.insert(out.end(), b.universals.begin(), b.universals.end());
    out.insert(out.end(), b.existentials.begin(), b.existentials.end());
  }
  return out;
}

std::optional<NormalFormView> view_normal_form(const Formula& f) {
  NormalFormView view;
  const Formula* cur = &f;
  while (cur->is_quantifier()) {
    const bool universal = cur->is(FormulaKind::kForall);
    if (view.blocks.empty() ||
        (universal && !view.blocks.back().existentials.empty())) {
      view.blocks.emplace_back();
    }
    auto& block = view.blocks.back();
    (universal ? block.universals : block.existentials).push_back(cur->var());
    cur = &cur->body();
  }
  while (cur->is(FormulaKind::kAnd) && is_guarded_hook(cur->lhs())) {
    view.guarded.push_back({cur->lhs().antecedent(), cur->lhs().consequent()});
    cur = &cur->rhs();
  }
  if (is_guarded_hook(*cur)) {
    view.guarded.push_back({cur->antecedent(), cur->consequent()});
    view.matrix = Formula::truth();
  } else if (cur->is_atom()) {
    view.guarded.push_back({Formula::truth(), *cur});
    view.matrix = Formula::truth();
  } else {
    view.matrix = *cur;
  }
  if (!flat_qf(view.matrix)) return std::nullopt;
  for (const auto& g : view.guarded) {
    if (!flat_qf(g.guard)) return std::nullopt;
  }
  std::set<std::string> seen;
  for (const auto& v : view.prefix_vars()) {
    if (!seen.insert(v).second) return std::nullopt;
  }
  return view;
}

NormalFormResult to_normal_form(const Formula& sentence) {
  if (!is_sentence(sentence)) {
    throw FormulaError("the normal form needs a sentence (no free variables)");
  }
  if (contains_kind(sentence, FormulaKind::kDiamond)) {
    throw FormulaError("the normal form needs diamonds expanded first");
  }
  NormalFormResult out;
  RewriteTrace& trace = out.trace;
  trace.notes.push_back(
      "equivalence holds over models with at least two elements");

  RewriteResult step = to_prenex(sentence);
  trace.append(step.trace);
  const std::size_t before_disj = trace.steps.size();
  step = disj_to_hook(step.formula, DisjunctionMode::kNonFirstOrder);
  trace.append(step.trace);
  std::set<std::string> witnesses;
  for (std::size_t i = before_disj; i < trace.steps.size(); ++i) {
    witnesses.insert(trace.steps[i].fresh.begin(), trace.steps[i].fresh.end());
  }
  step = to_prenex(step.formula);
  trace.append(step.trace);
  step = hook_normalize(step.formula);
  trace.append(step.trace);

  // Hooks over first-order consequents go into the matrix by definition.
  internal::EngineOptions options;
  Formula cur = internal::rewrite_fixpoint(
      step.formula,
      [](const Formula& node,
         const std::set<std::string>&) -> std::optional<internal::RuleHit> {
        if (!node.is(FormulaKind::kHook) || !is_first_order(node.consequent())) {
          return std::nullopt;
        }
        internal::RuleHit hit;
        hit.rule = "fold-fo-hook";
        hit.after = Formula::disj(
            nnf_negate(node.antecedent()),
            Formula::conj(node.antecedent(), node.consequent()));
        return hit;
      },
      options, trace);

  Path matrix_path;
  NormalFormView view;
  const Formula* m = &cur;
  while (m->is_quantifier()) {
    matrix_path.push_back(0);
    m = &m->body();
  }
  {
    auto prefix = view_normal_form(replace_at(cur, matrix_path,
                                              Formula::truth()));
    if (!prefix) throw FormulaError("internal: prefix binds a name twice");
    view.blocks = prefix->blocks;
  }
  std::vector<Formula> parts;
  flatten_conj(*m, parts);
  std::vector<Formula> fo_parts;
  for (const auto& c : parts) {
    if (is_guarded_hook(c)) {
      view.guarded.push_back({c.antecedent(), c.consequent()});
    } else if (c.is_atom()) {
      view.guarded.push_back({Formula::truth(), c});
    } else if (flat_qf(c)) {
      fo_parts.push_back(c);
    } else {
      throw FormulaError("unexpected conjunct in normal form: " +
                         print_formula(c));
    }
  }
  for (const auto& g : view.guarded) {
    if (!flat_qf(g.guard)) {
      throw FormulaError("guard is not quantifier-free: " +
                         print_formula(g.guard));
    }
    for (const auto& v : free_vars(g.guard)) {
      if (!witnesses.count(v)) {
        trace.notes.push_back("guard " + print_formula(g.guard) +
                              " uses " + v +
                              ", which is not a disjunction witness");
        break;
      }
    }
  }
  view.matrix = conjoin(fo_parts);
  std::vector<Formula> collected;
  for (const auto& g : view.guarded) {
    collected.push_back(Formula::hook(g.guard, g.atom));
  }
  collected.push_back(view.matrix);
  Formula new_matrix = conjoin(collected);
  if (!(new_matrix == *m)) {
    cur = internal::record_step(cur, matrix_path, "collect-matrix",
                                new_matrix, {}, trace);
  }
  if (!(view.to_formula() == cur)) {
    throw FormulaError("internal: normal form view does not match");
  }
  out.view = std::move(view);
  out.formula = cur;
  return out;
}

}  // namespace teamsem
