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


#ifndef TEAMSEM_REWRITE_H_
#define TEAMSEM_REWRITE_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "teamsem/formula.h"

namespace teamsem {

// One rule application: the subformula at path was replaced.
struct RewriteStep {
  std::string rule;
  Path path;
  Formula before;
  Formula after;
  std::vector<std::string> fresh;
};

struct RewriteTrace {
  std::vector<RewriteStep> steps;
  // Assumptions and shape diagnostics, e.g. the two-element model requirement.
  std::vector<std::string> notes;

  void append(const RewriteTrace& other);
  bool empty() const { return steps.empty(); }
};

// Applies the steps to input in order. Throws FormulaError when a step's
// recorded subformula does not match.
Formula replay(const Formula& input, const RewriteTrace& trace);

std::string format_trace(const RewriteTrace& trace);

struct RewriteResult {
  Formula formula;
  RewriteTrace trace;
};

enum class Macro { kNonconstancy, kNonemptiness, kDiamond, kInclusion };
using MacroSet = std::set<Macro>;

// nc, ne and the diamond; inclusion is expanded only on request.
MacroSet default_macros();

// Macro expansions, written in the input syntax:
//   nc(v)      ~> forall w. (w != v => all(w))
//   ne(v)      ~> (v = v /\ forall w. all(w))
//   <> psi     ~> ((forall w. all(w)) /\ psi) \/ top
//   inc(x ; y) ~> exists z w. (exc(x ; z) /\ ((w = y \/ w = z) /\ all(w)))
RewriteResult expand_macros(const Formula& f,
                            const MacroSet& which = default_macros());

// Alpha-renaming as a single traced step (no step when nothing changes).
RewriteResult rename_apart_traced(const Formula& f);

// Renames apart, then pulls quantifiers to the front. Hooks with quantified
// antecedents are first unfolded into their disjunctive definition. Throws
// FormulaError on diamonds.
RewriteResult to_prenex(const Formula& f);

enum class DisjunctionMode {
  kAll,
  // Disjunctions that are first-order are kept.
  kNonFirstOrder,
};

// psi1 \/ psi2 becomes exists q1 q2. ((q1 = q2 => psi1) /\ (q1 != q2 =>
// psi2)). Valid over models with at least two elements.
RewriteResult disj_to_hook(const Formula& f,
                           DisjunctionMode mode = DisjunctionMode::kAll);

// Merges nested hooks and pushes hooks inside conjunctions and quantifiers.
RewriteResult hook_normalize(const Formula& f);

struct QuantifierBlock {
  std::vector<std::string> universals;
  std::vector<std::string> existentials;
};

struct GuardedAtom {
  Formula guard;
  Formula atom;  // DepAtom or GenericDep
};

// forall x1 exists y1 ... forall xn exists yn.
//   ((g1 => D1) /\ ... /\ (gk => Dk) /\ matrix)
struct NormalFormView {
  std::vector<QuantifierBlock> blocks;
  std::vector<GuardedAtom> guarded;
  Formula matrix;

  Formula to_formula() const;
  std::vector<std::string> prefix_vars() const;
};

// Recognizes the normal-form shape; guards and matrix must be quantifier-free
// and first-order.
std::optional<NormalFormView> view_normal_form(const Formula& f);

struct NormalFormResult {
  NormalFormView view;
  Formula formula;  // view.to_formula()
  RewriteTrace trace;
};

// Throws FormulaError for open formulas and diamonds.
NormalFormResult to_normal_form(const Formula& sentence);

// Removes the leftmost guarded all-atom. Throws FormulaError when there is
// none.
RewriteResult eliminate_totality_once(const NormalFormView& nf);

// Normalizes and eliminates all-atoms until none remain. An all-free input is
// returned unchanged.
RewriteResult eliminate_totality(const Formula& sentence,
                                 std::size_t max_rounds = 64);

}  // namespace teamsem

#endif  // TEAMSEM_REWRITE_H_
