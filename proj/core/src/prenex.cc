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


// Prenex form, disjunction-to-hook and hook normalization.

#include "rewrite_engine.h"
#include "teamsem/errors.h"
#include "teamsem/formula_ops.h"

namespace teamsem {

namespace {

using internal::RuleHit;

Formula requantify(const Formula& q, Formula body) {
  return q.is(FormulaKind::kExists) ? Formula::exists(q.var(), std::move(body))
                                    : Formula::forall(q.var(), std::move(body));
}

// Gives every binder of a first-order formula a fresh name.
Formula freshen_binders(const Formula& f, std::set<std::string>& used,
                        std::vector<std::string>& fresh) {
  if (f.is_quantifier()) {
    const std::string v = fresh_name(f.var(), used);
    used.insert(v);
    fresh.push_back(v);
    Formula body = rename_free(f.body(), {{f.var(), v}});
    body = freshen_binders(body, used, fresh);
    return f.is(FormulaKind::kExists) ? Formula::exists(v, body)
                                      : Formula::forall(v, body);
  }
  Formula out = f;
  for (std::size_t i = 0; i < f.num_children(); ++i) {
    out = out.with_child(i, freshen_binders(f.child(i), used, fresh));
  }
  return out;
}

std::optional<RuleHit> prenex_rule(const Formula& f,
                                   const std::set<std::string>& in_use) {
  if (f.is(FormulaKind::kDiamond)) {
    throw FormulaError("prenex form needs diamonds expanded first");
  }
  if (f.is(FormulaKind::kHook)) {
    const Formula& theta = f.antecedent();
    const Formula& phi = f.consequent();
    if (!is_quantifier_free(theta)) {
      std::set<std::string> used = in_use;
      RuleHit hit;
      hit.rule = "hook-unfold";
      Formula negated = nnf_negate(freshen_binders(theta, used, hit.fresh));
      hit.after = Formula::disj(negated, Formula::conj(theta, phi));
      return hit;
    }
    if (phi.is_quantifier()) {
      if (all_vars(theta).count(phi.var())) {
        throw FormulaError("variable " + phi.var() +
                           " would be captured; rename apart first");
      }
      RuleHit hit;
      hit.rule = phi.is(FormulaKind::kExists) ? "harpinside-exists"
                                              : "harpinside-forall";
      hit.after = requantify(phi, Formula::hook(theta, phi.body()));
      return hit;
    }
    return std::nullopt;
  }
  if (!f.is(FormulaKind::kAnd) && !f.is(FormulaKind::kOr)) return std::nullopt;
  const bool left = f.lhs().is_quantifier();
  if (!left && !f.rhs().is_quantifier()) return std::nullopt;
  const Formula& q = left ? f.lhs() : f.rhs();
  const Formula& other = left ? f.rhs() : f.lhs();
  if (free_vars(other).count(q.var())) {
    throw FormulaError("variable " + q.var() +
                       " occurs on both sides; rename apart first");
  }
  const bool conj = f.is(FormulaKind::kAnd);
  auto rebuild = [&](const Formula& a, const Formula& b) {
    return conj ? Formula::conj(a, b) : Formula::disj(a, b);
  };
  RuleHit hit;
  if (q.is(FormulaKind::kExists) || conj) {
    hit.rule = std::string("qmove-") +
               (q.is(FormulaKind::kExists) ? "exists" : "forall") +
               (conj ? "-and" : "-or");
    hit.after = requantify(
        q, left ? rebuild(q.body(), other) : rebuild(other, q.body()));
    return hit;
  }
  // (forall v psi1) \/ psi2
  std::set<std::string> used = in_use;
  const std::string p = fresh_name("p", used);
  used.insert(p);
  const std::string qv = fresh_name("q", used);
  hit.rule = "qmove-forall-or";
  hit.fresh = {p, qv};
  const Formula same =
      Formula::equality(Term::var(p), Term::var(qv));
  const Formula differ =
      Formula::equality(Term::var(p), Term::var(qv), true);
  Formula body =
      left ? Formula::disj(Formula::conj(same, q.body()),
                           Formula::conj(differ, other))
           : Formula::disj(Formula::conj(differ, other),
                           Formula::conj(same, q.body()));
  hit.after = exists_all({p, qv}, Formula::forall(q.var(), body));
  return hit;
}

}  // namespace

RewriteResult rename_apart_traced(const Formula& f) {
  RewriteResult out;
  Formula renamed = rename_apart(f);
  if (renamed == f) {
    out.formula = f;
    return out;
  }
  const auto before = all_vars(f);
  std::vector<std::string> fresh;
  for (const auto& v : all_vars(renamed)) {
    if (!before.count(v)) fresh.push_back(v);
  }
  out.formula =
      internal::record_step(f, {}, "rename-apart", renamed, fresh, out.trace);
  return out;
}

RewriteResult to_prenex(const Formula& f) {
  if (contains_kind(f, FormulaKind::kDiamond)) {
    throw FormulaError("prenex form needs diamonds expanded first");
  }
  RewriteResult out = rename_apart_traced(f);
  internal::EngineOptions options;
  options.order = internal::Order::kPost;
  out.formula =
      internal::rewrite_fixpoint(out.formula, prenex_rule, options, out.trace);
  for (const auto& s : out.trace.steps) {
    if (s.rule == "hook-unfold") {
      out.trace.notes.push_back(
          "hooks with quantified antecedents were unfolded by definition");
      break;
    }
  }
  return out;
}

RewriteResult disj_to_hook(const Formula& f, DisjunctionMode mode) {
  RewriteResult out;
  internal::EngineOptions options;
  options.order = internal::Order::kPre;
  out.formula = internal::rewrite_fixpoint(
      f,
      [mode](const Formula& node,
             const std::set<std::string>& used) -> std::optional<RuleHit> {
        if (!node.is(FormulaKind::kOr)) return std::nullopt;
        if (mode == DisjunctionMode::kNonFirstOrder && is_first_order(node)) {
          return std::nullopt;
        }
        RuleHit hit;
        hit.rule = "disj2harp";
        hit.fresh = fresh_vars(2, used, "q");
        const Term q1 = Term::var(hit.fresh[0]);
        const Term q2 = Term::var(hit.fresh[1]);
        hit.after = exists_all(
            hit.fresh,
            Formula::conj(
                Formula::hook(Formula::equality(q1, q2), node.lhs()),
                Formula::hook(Formula::equality(q1, q2, true), node.rhs())));
        return hit;
      },
      options, out.trace);
  if (!out.trace.empty()) {
    out.trace.notes.push_back(
        "disjunctions replaced by hooks: valid over models with at least two "
        "elements");
  }
  return out;
}

RewriteResult hook_normalize(const Formula& f) {
  RewriteResult out;
  internal::EngineOptions options;
  options.order = internal::Order::kPre;
  out.formula = internal::rewrite_fixpoint(
      f,
      [](const Formula& node,
         const std::set<std::string>&) -> std::optional<RuleHit> {
        if (!node.is(FormulaKind::kHook)) return std::nullopt;
        const Formula& theta = node.antecedent();
        const Formula& phi = node.consequent();
        RuleHit hit;
        if (phi.is(FormulaKind::kHook)) {
          hit.rule = "harpinside-merge";
          hit.after = Formula::hook(Formula::conj(theta, phi.antecedent()),
                                    phi.consequent());
          return hit;
        }
        if (phi.is(FormulaKind::kAnd)) {
          hit.rule = "harpinside-split";
          hit.after = Formula::conj(Formula::hook(theta, phi.lhs()),
                                    Formula::hook(theta, phi.rhs()));
          return hit;
        }
        if (phi.is_quantifier()) {
          if (all_vars(theta).count(phi.var())) {
            throw FormulaError("variable " + phi.var() +
                               " would be captured; rename apart first");
          }
          hit.rule = phi.is(FormulaKind::kExists) ? "harpinside-exists"
                                                  : "harpinside-forall";
          hit.after = requantify(phi, Formula::hook(theta, phi.body()));
          return hit;
        }
        return std::nullopt;
      },
      options, out.trace);
  return out;
}

}  // namespace teamsem
