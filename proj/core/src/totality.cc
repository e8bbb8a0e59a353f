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


// Elimination of totality atoms all(t) from normal-form sentences.

#include "rewrite_engine.h"
#include "teamsem/errors.h"
#include "teamsem/formula_ops.h"

namespace teamsem {

namespace {

bool is_totality(const Formula& atom) {
  return atom.is(FormulaKind::kDepAtom) && atom.name() == "all";
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

}  // namespace

RewriteResult eliminate_totality_once(const NormalFormView& nf) {
  std::size_t chosen = nf.guarded.size();
  for (std::size_t k = 0; k < nf.guarded.size(); ++k) {
    if (is_totality(nf.guarded[k].atom)) {
      chosen = k;
      break;
    }
  }
  if (chosen == nf.guarded.size()) {
    throw FormulaError("no totality atom to eliminate");
  }
  const Formula input = nf.to_formula();
  std::set<std::string> used = all_vars(input);
  std::vector<std::string> fresh;
  auto take = [&](std::string_view base) {
    std::string v = fresh_name(base, used);
    used.insert(v);
    fresh.push_back(v);
    return v;
  };

  const Formula& theta = nf.guarded[chosen].guard;
  const Terms& t = nf.guarded[chosen].atom.terms();

  std::vector<std::string> z;
  if (t.size() == 1) {
    z.push_back(take("z"));
  } else {
    z = fresh_vars(t.size(), used, "z");
    used.insert(z.begin(), z.end());
    fresh.insert(fresh.end(), z.begin(), z.end());
  }

  std::map<std::string, std::string> prime;
  std::vector<std::string> primed;
  for (const auto& v : nf.prefix_vars()) {
    prime[v] = take(v + "'");
    primed.push_back(prime[v]);
  }
  const std::string p = take("p");
  const std::string q = take("q");

  // chi: the other guarded atoms and the matrix.
  std::vector<Formula> chi;
  for (std::size_t k = 0; k < nf.guarded.size(); ++k) {
    if (k != chosen) {
      chi.push_back(Formula::hook(nf.guarded[k].guard, nf.guarded[k].atom));
    }
  }
  chi.push_back(nf.matrix);

  std::vector<Formula> inner;
  std::vector<Formula> antecedent{
      Formula::equality(Term::var(p), Term::var(q))};
  for (const auto& block : nf.blocks) {
    for (const auto& x : block.universals) {
      antecedent.push_back(
          Formula::equality(Term::var(x), Term::var(prime[x])));
    }
    if (block.existentials.empty()) continue;
    std::vector<Formula> same;
    for (const auto& y : block.existentials) {
      same.push_back(Formula::equality(Term::var(y), Term::var(prime[y])));
    }
    inner.push_back(Formula::hook(conjoin(antecedent), conjoin(same)));
  }
  inner.push_back(conjoin(chi));
  Formula body = conjoin(inner);
  for (auto it = nf.blocks.rbegin(); it != nf.blocks.rend(); ++it) {
    body = forall_all(it->universals, exists_all(it->existentials, body));
  }
  body = forall_all({p, q}, body);

  Formula outer = conjoin({rename_free(theta, prime),
                           tuple_equal(rename_terms(t, prime), var_terms(z)),
                           body});
  Formula result = forall_all(z, exists_all(primed, outer));

  RewriteResult out;
  out.formula = internal::record_step(input, {}, "eliminate-totality", result,
                                      std::move(fresh), out.trace);
  out.trace.notes.push_back(
      "totality elimination compares p and q and needs models with at least "
      "two elements");
  return out;
}

RewriteResult eliminate_totality(const Formula& sentence,
                                 std::size_t max_rounds) {
  if (!is_sentence(sentence)) {
    throw FormulaError("totality elimination needs a sentence");
  }
  RewriteResult out;
  out.formula = sentence;
  if (!dependency_counts(sentence).count("all")) return out;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    NormalFormResult nf = to_normal_form(out.formula);
    out.trace.append(nf.trace);
    out.formula = nf.formula;
    bool any = false;
    for (const auto& g : nf.view.guarded) any = any || is_totality(g.atom);
    if (!any) return out;
    RewriteResult once = eliminate_totality_once(nf.view);
    out.trace.append(once.trace);
    out.formula = once.formula;
  }
  throw FormulaError("totality elimination did not finish within " +
                     std::to_string(max_rounds) + " rounds");
}

}  // namespace teamsem
