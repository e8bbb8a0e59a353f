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
#include "teamsem/formula_ops.h"

namespace teamsem {

namespace {

std::vector<std::string> pick(std::size_t n, std::string_view base,
                              std::set<std::string>& used) {
  std::vector<std::string> out;
  if (n == 1) {
    out.push_back(fresh_name(base, used));
  } else {
    out = fresh_vars(n, used, base);
  }
  used.insert(out.begin(), out.end());
  return out;
}

Formula all_atom(const std::vector<std::string>& vars) {
  return Formula::dep("all", var_terms(vars));
}

// forall w. all(w)
Formula nonempty_team(std::set<std::string>& used,
                      std::vector<std::string>& fresh) {
  const auto w = pick(1, "w", used);
  fresh.insert(fresh.end(), w.begin(), w.end());
  return Formula::forall(w[0], all_atom(w));
}

std::optional<internal::RuleHit> expand(const Formula& f,
                                        const std::set<std::string>& in_use,
                                        const MacroSet& which) {
  std::set<std::string> used = in_use;
  internal::RuleHit hit;
  if (f.is(FormulaKind::kDiamond) && which.count(Macro::kDiamond)) {
    hit.rule = "macro-diamond";
    Formula ne = nonempty_team(used, hit.fresh);
    hit.after = Formula::disj(Formula::conj(ne, f.body()), Formula::truth());
    return hit;
  }
  if (!f.is(FormulaKind::kDepAtom)) return std::nullopt;
  const Terms& v = f.terms();
  if (f.name() == "nc" && which.count(Macro::kNonconstancy)) {
    hit.rule = "macro-nc";
    hit.fresh = pick(v.size(), "w", used);
    hit.after = forall_all(
        hit.fresh, Formula::hook(tuple_distinct(var_terms(hit.fresh), v),
                                 all_atom(hit.fresh)));
    return hit;
  }
  if (f.name() == "ne" && which.count(Macro::kNonemptiness)) {
    hit.rule = "macro-ne";
    Formula ne = nonempty_team(used, hit.fresh);
    hit.after = Formula::conj(tuple_equal(v, v), ne);
    return hit;
  }
  if (f.name() == "inc" && which.count(Macro::kInclusion) &&
      v.size() % 2 == 0) {
    hit.rule = "macro-inc";
    const std::size_t k = v.size() / 2;
    const Terms x(v.begin(), v.begin() + k);
    const Terms y(v.begin() + k, v.end());
    const auto z = pick(k, "z", used);
    const auto w = pick(k, "w", used);
    Terms xz = x;
    const Terms zt = var_terms(z), wt = var_terms(w);
    xz.insert(xz.end(), zt.begin(), zt.end());
    Formula body = Formula::conj(
        Formula::dep("exc", xz, k),
        Formula::conj(Formula::disj(tuple_equal(wt, y), tuple_equal(wt, zt)),
                      Formula::dep("all", wt)));
    std::vector<std::string> bound = z;
    bound.insert(bound.end(), w.begin(), w.end());
    hit.fresh = bound;
    hit.after = exists_all(bound, body);
    return hit;
  }
  return std::nullopt;
}

}  // namespace

MacroSet default_macros() {
  return {Macro::kNonconstancy, Macro::kNonemptiness, Macro::kDiamond};
}

RewriteResult expand_macros(const Formula& f, const MacroSet& which) {
  RewriteResult out;
  internal::EngineOptions options;
  options.order = internal::Order::kPre;
  out.formula = internal::rewrite_fixpoint(
      f,
      [&](const Formula& node, const std::set<std::string>& used) {
        return expand(node, used, which);
      },
      options, out.trace);
  return out;
}

}  // namespace teamsem
