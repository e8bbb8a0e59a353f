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


// Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "commands.h"
#include "oracle.h"
#include "teamsem/equivcheck.h"
#include "teamsem/formula_ops.h"
#include "teamsem/rewrite.h"
#include "teamsem/semantics.h"
#include "teamsem/structures.h"
#include "teamsem/text_io.h"

namespace teamsem {
namespace {

using Clock = std::chrono::steady_clock;

// Runtime limits in seconds, per criterion.
constexpr double kLimitSeconds[11] = {0, 300, 300, 120, 300, 600,
                                      600, 600, 300, 120, 300};

struct Outcome {
  bool pass = false;
  std::string detail;
};

const Registry& reg() {
  static const Registry r = builtin_registry();
  return r;
}

// Default prunings, except that first-order subformulas still go through the
// team rules instead of the row-by-row shortcut the flatness suite checks.
EvalOptions team_rules() {
  EvalOptions o;
  o.flat_first_order = false;
  return o;
}

Signature graph_sig() {
  Signature s;
  s.relations["E"] = 2;
  return s;
}

std::vector<std::string> vars_of(const Formula& f) {
  const auto fv = free_vars(f);
  return {fv.begin(), fv.end()};
}

std::string ratio(std::uint64_t ok, std::uint64_t total) {
  return std::to_string(ok) + "/" + std::to_string(total);
}

// Teams do not depend on relations, so they are built once per size.
const std::vector<Team>& all_teams(std::size_t n,
                                   const std::vector<std::string>& vars) {
  static std::map<std::pair<std::size_t, std::vector<std::string>>,
                  std::vector<Team>>
      cache;
  auto key = std::make_pair(n, vars);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, enumerate_teams(equality_model(n), vars)).first;
  }
  return it->second;
}

std::size_t row_code(std::span<const Element> row, std::size_t n) {
  std::size_t c = 0;
  for (Element e : row) c = c * n + e;
  return c;
}

// Pointwise truth of a first-order formula on every assignment over vars.
std::vector<bool> pointwise(const Model& m, const Formula& f,
                            const std::vector<std::string>& vars) {
  const std::size_t n = m.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) total *= n;
  std::vector<bool> out(total);
  for (std::size_t c = 0; c < total; ++c) {
    Assignment s;
    std::size_t code = c;
    for (std::size_t i = vars.size(); i-- > 0;) {
      s[vars[i]] = static_cast<Element>(code % n);
      code /= n;
    }
    out[c] = oracle::tarski(m, s, f);
  }
  return out;
}

std::vector<Formula> fo_corpus(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<Formula> out;
  const std::vector<std::vector<std::string>> frees = {{}, {"x"}, {"x", "y"}};
  while (out.size() < count) {
    oracle::GenOptions o;
    o.depth = 3;
    o.free = frees[out.size() % 3];
    Formula f = oracle::random_formula(rng, o);
    if (free_vars(f).size() <= 2) out.push_back(std::move(f));
  }
  return out;
}

Outcome flatness() {
  const auto corpus = fo_corpus(1001, 200);
  std::uint64_t ok = 0, total = 0;
  for (const auto& f : corpus) {
    const auto vars = vars_of(f);
    for (std::size_t n : {2u, 3u}) {
      const auto& teams = all_teams(n, vars);
      for (const Model& m : enumerate_models(graph_sig(), n)) {
        const auto sat = pointwise(m, f, vars);
        Evaluator ev(m, f, reg(), team_rules());
        for (const Team& x : teams) {
          bool expected = true;
          for (std::size_t i = 0; i < x.size() && expected; ++i) {
            expected = sat[row_code(x.row(i), n)];
          }
          ++total;
          if (ev(x) == expected) ++ok;
        }
      }
    }
  }
  return {ok == total, ratio(ok, total) + " model/team pairs agree"};
}

Outcome locality() {
  const auto corpus = fo_corpus(1001, 200);
  std::mt19937_64 rng(2002);
  std::uint64_t ok = 0, total = 0;
  for (const auto& f : corpus) {
    const auto vars = vars_of(f);
    std::vector<std::string> padded{"u"};
    padded.insert(padded.end(), vars.begin(), vars.end());
    for (std::size_t n : {2u, 3u}) {
      std::size_t assignments = 1;
      for (std::size_t i = 0; i < padded.size(); ++i) assignments *= n;
      for (const Model& m : enumerate_models(graph_sig(), n)) {
        Evaluator ev(m, f, reg(), team_rules());
        auto check = [&](const Team& x) {
          ++total;
          if (ev(x) == ev(x.restricted_to(vars))) ++ok;
        };
        if (assignments <= 9) {
          for (const Team& x : all_teams(n, padded)) check(x);
        } else {
          std::uniform_int_distribution<std::uint64_t> pick(
              0, (std::uint64_t{1} << assignments) - 1);
          for (int i = 0; i < 24; ++i) check(team_at(m, padded, pick(rng)));
        }
      }
    }
  }
  return {ok == total, ratio(ok, total) + " padded teams agree"};
}

const std::vector<std::pair<std::string, std::size_t>>& mixed_deps() {
  static const std::vector<std::pair<std::string, std::size_t>> kDeps = {
      {"const", 1}, {"all", 1}, {"nc", 1},  {"ne", 1},
      {"inc", 2},   {"exc", 2}, {"fdep", 2}, {"const", 2}};
  return kDeps;
}

Outcome hook_law() {
  std::mt19937_64 rng(3003);
  std::uint64_t ok = 0, total = 0, formulas = 0;
  while (formulas < 50) {
    oracle::GenOptions th;
    th.depth = 1 + static_cast<int>(formulas % 2);
    th.free = {"x", "y"};
    oracle::GenOptions ph;
    ph.depth = 2;
    ph.free = {"x", "y"};
    ph.deps = mixed_deps();
    const Formula theta = oracle::random_formula(rng, th);
    const Formula phi = oracle::random_formula(rng, ph);
    const Formula hook = Formula::hook(theta, phi);
    const Formula expanded = Formula::disj(nnf_negate(theta),
                                           Formula::conj(theta, phi));
    ++formulas;
    const auto vars = vars_of(hook);
    for (const Model& m : enumerate_models(graph_sig(), 2)) {
      Evaluator e_hook(m, hook, reg(), team_rules());
      Evaluator e_exp(m, expanded, reg(), team_rules());
      Evaluator e_phi(m, phi, reg(), team_rules());
      for (const Team& x : all_teams(2, vars)) {
        oracle::Rows kept;
        for (const auto& s : oracle::rows_of(x)) {
          if (oracle::tarski(m, s, theta)) kept.insert(s);
        }
        const bool a = e_hook(x);
        const bool b = e_phi(oracle::team_of(vars, kept));
        const bool c = e_exp(x);
        const bool d = oracle::satisfies(m, oracle::rows_of(x), hook, reg());
        ++total;
        if (a == b && b == c && c == d) ++ok;
      }
    }
  }
  return {ok == total, ratio(ok, total) + " cases on 50 formulas"};
}

Outcome closure_preservation() {
  struct Suite {
    const char* name;
    std::vector<std::pair<std::string, std::size_t>> deps;
  };
  const Suite suites[] = {
      {"downward", {{"const", 1}, {"const", 2}, {"exc", 2}, {"fdep", 2}, {"fdep", 3}}},
      {"union", {{"all", 1}, {"all", 2}, {"ne", 1}, {"nc", 1}, {"nc", 2}, {"inc", 2}}},
      {"empty-team", {{"const", 1}, {"exc", 2}, {"fdep", 2}, {"inc", 2}, {"inc", 4}}},
  };
  std::mt19937_64 rng(4004);
  std::ostringstream detail;
  bool pass = true;
  for (const auto& suite : suites) {
    std::uint64_t violations = 0, checks = 0;
    for (int i = 0; i < 80; ++i) {
      oracle::GenOptions o;
      o.depth = 3;
      o.free = {"x", "y"};
      o.deps = suite.deps;
      o.hooks = true;
      const Formula f = oracle::random_formula(rng, o);
      std::vector<std::string> vars{"x", "y"};
      for (const Model& m : enumerate_models(graph_sig(), 2)) {
        const auto& teams = all_teams(2, vars);
        Evaluator ev(m, f, reg(), team_rules());
        std::map<std::uint64_t, bool> sat;
        std::vector<std::uint64_t> masks;
        for (const Team& x : teams) {
          std::uint64_t mask = 0;
          for (std::size_t r = 0; r < x.size(); ++r) {
            mask |= std::uint64_t{1} << row_code(x.row(r), 2);
          }
          sat[mask] = ev(x);
          masks.push_back(mask);
        }
        for (std::uint64_t a : masks) {
          if (suite.name[0] == 'e') {
            ++checks;
            if (a == 0 && !sat[a]) ++violations;
            continue;
          }
          if (!sat[a]) continue;
          for (std::uint64_t b : masks) {
            if (suite.name[0] == 'd') {
              if ((b & ~a) != 0) continue;
              ++checks;
              if (!sat[b]) ++violations;
            } else {
              if (!sat[b]) continue;
              ++checks;
              if (!sat[a | b]) ++violations;
            }
          }
        }
      }
    }
    pass = pass && violations == 0;
    detail << suite.name << ": " << violations << " violations in " << checks
           << " checks; ";
  }
  return {pass, detail.str()};
}

// Classifies every team on which inc(x;y) and its exclusion expansion
// disagree. Reported next to the verdict; it does not change it.
std::string inclusion_diagnosis() {
  const Formula inc = parse_formula("inc(x ; y)");
  const Formula expansion = parse_formula(
      "exists z w. (exc(x ; z) /\\ ((w = y \\/ w = z) /\\ all(w)))");
  const std::vector<std::string> xy{"x", "y"};
  std::uint64_t differ = 0, explained = 0, other_agree = 0, others = 0;
  for (std::size_t n : {2u}) {
    const Model m = equality_model(n);
    for (const Team& x : all_teams(n, xy)) {
      std::set<Element> xs;
      for (std::size_t r = 0; r < x.size(); ++r) xs.insert(x.row(r)[0]);
      const bool special = x.empty() || xs.size() == n;
      const bool same = eval(m, x, inc, reg()) == eval(m, x, expansion, reg());
      if (!same) {
        ++differ;
        if (special) ++explained;
      }
      if (!special) {
        ++others;
        if (same) ++other_agree;
      }
    }
  }
  return "; inclusion expansion differs on " + std::to_string(differ) +
         " teams at size 2, " + ratio(explained, differ) +
         " of them empty or with x taking every value, agrees on " +
         ratio(other_agree, others) + " remaining teams";
}

Outcome macro_equivalences() {
  struct Case {
    std::string a, b;
    std::vector<std::size_t> sizes;
  };
  const std::vector<std::size_t> both{2, 3}, two{2};
  const std::vector<Case> cases = {
      {"nc(x)", "forall w. (w != x => all(w))", both},
      {"nc(x,y)", "forall w1 w2. ((w1 != x \\/ w2 != y) => all(w1,w2))", both},
      {"ne(x)", "x = x /\\ forall w. all(w)", both},
      {"ne(x,y)", "(x = x /\\ y = y) /\\ forall w. all(w)", both},
      {"<> const(x)", "(ne(x) /\\ const(x)) \\/ top", both},
      {"<> E(x,x)", "(ne(x) /\\ E(x,x)) \\/ top", both},
      {"<> (nc(x) /\\ E(x,y))", "(ne(x,y) /\\ (nc(x) /\\ E(x,y))) \\/ top", both},
      {"<> exists y. (E(x,y) /\\ inc(y ; x))",
       "(ne(x) /\\ exists y. (E(x,y) /\\ inc(y ; x))) \\/ top", both},
      {"inc(x ; y)",
       "exists z w. (exc(x ; z) /\\ ((w = y \\/ w = z) /\\ all(w)))", both},
      {"inc(x1,x2 ; y1,y2)",
       "exists z1 z2 w1 w2. (exc(x1,x2 ; z1,z2) /\\ (((w1 = y1 /\\ w2 = y2) "
       "\\/ (w1 = z1 /\\ w2 = z2)) /\\ all(w1,w2)))",
       two},
  };
  std::uint64_t ok = 0, total = 0;
  std::string failed;
  for (const auto& c : cases) {
    const Formula a = parse_formula(c.a);
    EquivOptions eo;
    eo.sizes = c.sizes;
    // The written expansion, and the library's macro expansion.
    MacroSet macros = default_macros();
    if (dependency_counts(a).count("inc") && !contains_kind(a, FormulaKind::kDiamond)) {
      macros.insert(Macro::kInclusion);
    }
    for (const Formula& b :
         {parse_formula(c.b), expand_macros(a, macros).formula}) {
      ++total;
      const Verdict v = equivalent(a, b, eo);
      if (v.equivalent()) {
        ++ok;
      } else {
        failed += " [" + c.a + " vs " + print_formula(b) + "]";
      }
    }
  }
  return {ok == total,
          ratio(ok, total) + " equivalences" + failed + inclusion_diagnosis()};
}

std::map<std::string, std::size_t> dep_profile(const Formula& f) {
  std::map<std::string, std::size_t> out;
  std::function<void(const Formula&)> rec = [&](const Formula& g) {
    if (g.is(FormulaKind::kDepAtom)) {
      ++out[g.name() + "/" + std::to_string(g.terms().size())];
    }
    for (std::size_t i = 0; i < g.num_children(); ++i) rec(g.child(i));
  };
  rec(f);
  return out;
}

const std::vector<std::string>& rewrite_corpus() {
  static const std::vector<std::string> kCorpus = {
      "(exists x. E(x,x)) \\/ forall y. E(y,y)",
      "forall x. (exists y. E(x,y) /\\ exists y. E(y,x))",
      "exists x. (const(x) \\/ forall y. E(x,y))",
      "forall x. (E(x,x) \\/ exists y. (E(x,y) /\\ const(y)))",
      "exists x y. (fdep(x ; y) /\\ (E(x,y) \\/ x = y))",
      "forall x. exists y. (inc(y ; x) \\/ E(x,y))",
      "(forall x. all(x)) \\/ exists y. !E(y,y)",
      "forall x. (E(x,x) => exists y. (E(x,y) /\\ nc(y)))",
      "exists x. ((E(x,x) => const(x)) /\\ forall y. (x = y \\/ E(x,y)))",
      "forall x y. (exc(x ; y) \\/ x = y)",
      "exists x. forall y. ((E(x,y) \\/ const(y)) /\\ (x != y \\/ E(y,y)))",
      "(exists x. const(x)) /\\ (exists x. nc(x))",
      "forall x. ((exists y. (E(x,y) /\\ ne(y))) \\/ (forall y. !E(x,y)))",
      "exists x. (x = x /\\ (forall y. (inc(y ; x) \\/ E(y,x))))",
      "forall x. exists y. ((x = y => const(x)) /\\ (x != y => E(x,y)))",
      "(exists x y. E(x,y)) \\/ (forall x. exists y. fdep(x ; y))",
      "exists x. (all(x) \\/ const(x))",
      "forall x. (const(x) \\/ (E(x,x) /\\ exists y. const(y)))",
      "exists x y. ((E(x,y) \\/ E(y,x)) /\\ (fdep(x ; y) \\/ exc(x ; y)))",
      "forall x. exists y. (E(x,y) /\\ (forall z. (E(y,z) => inc(z ; x))))",
      "exists x. ((forall y. E(x,y)) \\/ (exists y. (!E(x,y) /\\ nc(y))))",
      "forall x. ((E(x,x) /\\ const(x)) \\/ (!E(x,x) /\\ nc(x)))",
      "(forall x. exists y. E(x,y)) /\\ (exists x. forall y. (E(y,x) \\/ x = y))",
      "exists x. forall y. exists z. ((E(x,y) \\/ E(y,z)) /\\ fdep(y ; z))",
      "forall x. (x = x => exists y. (E(x,y) \\/ all(y)))",
      "exists x. (E(x,x) \\/ (forall y. (E(x,y) /\\ ne(y))))",
      "E(x,x) \\/ exists y. (E(x,y) /\\ const(y))",
      "forall y. (E(x,y) \\/ const(y))",
      "(exists y. inc(y ; x)) \\/ E(x,x)",
      "const(x) \\/ nc(x)",
      "exists y. ((E(x,y) => const(y)) /\\ (E(y,x) \\/ x = y))",
      "(forall y. E(x,y)) /\\ (exists y. (E(y,x) /\\ all(y)))",
  };
  return kCorpus;
}

Outcome rewrite_soundness() {
  EquivOptions eo;
  eo.sizes = {2, 3};
  std::uint64_t ok = 0, total = 0, counted = 0, counts_ok = 0;
  std::string failed;
  for (const auto& text : rewrite_corpus()) {
    const Formula f = parse_formula(text);
    std::vector<std::pair<std::string, RewriteResult>> passes;
    passes.emplace_back("rename-apart", rename_apart_traced(f));
    passes.emplace_back("prenex", to_prenex(f));
    passes.emplace_back("disj-to-hook", disj_to_hook(f));
    passes.emplace_back("hook-normalize", hook_normalize(to_prenex(f).formula));
    if (is_sentence(f)) {
      NormalFormResult nf = to_normal_form(f);
      passes.emplace_back("normal-form", RewriteResult{nf.formula, nf.trace});
    }
    for (const auto& [name, r] : passes) {
      ++total;
      const Formula& input =
          name == "hook-normalize" ? to_prenex(f).formula : f;
      const bool replays = replay(input, r.trace) == r.formula;
      const Verdict v = equivalent(f, r.formula, eo);
      if (v.equivalent() && replays) {
        ++ok;
      } else {
        failed += " [" + name + ": " + text + "]";
      }
      ++counted;
      bool counts = dep_profile(r.formula) == dep_profile(f);
      if (name != "disj-to-hook" && name != "rename-apart") {
        counts = counts && universal_count(r.formula) == universal_count(f);
      }
      if (name == "prenex" || name == "normal-form") {
        const Formula* cur = &r.formula;
        while (cur->is_quantifier()) cur = &cur->body();
        counts = counts && is_quantifier_free(*cur);
      }
      if (name == "normal-form") {
        counts = counts && view_normal_form(r.formula).has_value();
      }
      if (counts) {
        ++counts_ok;
      } else {
        failed += " [counts " + name + ": " + text + "]";
      }
    }
  }
  return {ok == total && counts_ok == counted,
          ratio(ok, total) + " pass outputs equivalent, " +
              ratio(counts_ok, counted) + " counting invariants" + failed};
}

const std::vector<std::string>& totality_corpus() {
  static const std::vector<std::string> kCorpus = {
      "exists y. all(y)",
      "forall x. exists y. (E(x,y) /\\ all(y))",
      "exists x. (E(x,x) \\/ all(x))",
      "forall x. (E(x,x) => exists y. all(y))",
      "exists x y. (all(x,y) \\/ E(x,y))",
      "forall x. exists y. (nc(y) /\\ E(x,y))",
      "exists x. ne(x)",
      "forall x. (ne(x) \\/ E(x,x))",
      "forall x. <> E(x,x)",
      "exists x. <> (E(x,x) /\\ const(x))",
      "exists x. forall y. (E(x,y) \\/ nc(y))",
      "forall x. exists y. ((x = y \\/ all(y)) /\\ const(y))",
  };
  return kCorpus;
}

Outcome totality_elimination() {
  EquivOptions eo;
  eo.sizes = {2, 3};
  std::uint64_t ok = 0, total = 0;
  std::string failed;
  for (const auto& text : totality_corpus()) {
    const Formula f = parse_formula(text);
    const Formula expanded = expand_macros(f).formula;
    const Formula out = eliminate_totality(expanded).formula;
    const auto counts = dependency_counts(out);
    const bool free_of_all = !counts.count("all") && !counts.count("nc") &&
                             !counts.count("ne") &&
                             !contains_kind(out, FormulaKind::kDiamond);
    ++total;
    const Verdict v = equivalent(f, out, eo);
    if (free_of_all && v.equivalent()) {
      ++ok;
    } else {
      failed += " [" + text + "]";
    }
  }
  return {ok == total, ratio(ok, total) + " sentences" + failed};
}

// Shared by criteria 8 and 10.
struct UnsafetyFacts {
  bool computed = false;
  bool separation = true;        // nonconn true on A_n, false on B_n
  std::uint64_t flat_ok = 0, flat_total = 0;
};
UnsafetyFacts g_unsafety;

const std::vector<std::string>& open_inc_corpus() {
  static const std::vector<std::string> kCorpus = {
      "inc(x ; y)",
      "E(x,y) /\\ inc(y ; x)",
      "exists z. (E(x,z) /\\ inc(z ; y))",
      "forall z. (E(x,z) => inc(z ; x))",
      "x != y \\/ inc(x ; y)",
      "forall z. exists w. (E(z,w) /\\ inc(w ; y))",
  };
  return kCorpus;
}

Outcome unsafety() {
  const Formula nonconn = nonconn_sentence();
  const Team eps = Team::epsilon();
  std::ostringstream detail;
  bool pass = true;

  // Connectivity oracle over all simple graphs with at most 6 vertices.
  std::uint64_t graphs = 0, agree = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<std::pair<Element, Element>> pairs;
    for (Element i = 0; i < n; ++i) {
      for (Element j = i + 1; j < n; ++j) pairs.push_back({i, j});
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size());
         ++mask) {
      std::vector<std::pair<Element, Element>> edges;
      for (std::size_t b = 0; b < pairs.size(); ++b) {
        if (mask >> b & 1) edges.push_back(pairs[b]);
      }
      const Model g = graph_model(names, edges);
      ++graphs;
      if (eval(g, eps, nonconn, reg()) == !oracle::connected(g)) ++agree;
    }
  }
  pass = pass && agree == graphs;
  detail << "nonconn vs connectivity " << ratio(agree, graphs) << "; ";

  const std::set<std::string> kinds{"inc"};
  std::vector<Formula> corpus;
  for (const auto& t : cli::unsafety_corpus()) corpus.push_back(parse_formula(t));
  std::vector<Formula> open;
  for (const auto& t : open_inc_corpus()) open.push_back(parse_formula(t));
  const std::vector<Formula> fo = fo_corpus(8008, 12);

  std::uint64_t itercl = 0, itercl_total = 0, focl = 0, focl_total = 0,
                clinc = 0, clinc_total = 0;
  std::mt19937_64 rng(8888);
  for (int n : {1, 2}) {
    const Model a = graph_An(n), b = graph_Bn(n);
    for (const Model* m : {&a, &b}) {
      const bool is_a = m == &a;
      const bool value = eval(*m, eps, nonconn, reg());
      const bool expected = is_a;
      g_unsafety.separation = g_unsafety.separation && value == expected &&
                              oracle::connected(*m) == !is_a;
      for (const auto& f : corpus) {
        ++g_unsafety.flat_total;
        if (eval(*m, eps, f, reg()) == eval(*m, eps, flatten(f, kinds), reg())) {
          ++g_unsafety.flat_ok;
        }
      }
      // Brute-force automorphisms where feasible.
      const std::vector<Permutation> perms =
          m->size() <= 8 ? oracle::brute_automorphisms(*m) : automorphisms(*m);
      const std::vector<std::string> xy{"x", "y"};
      const std::size_t n2 = m->size() * m->size();
      std::bernoulli_distribution keep(3.0 / static_cast<double>(n2));
      auto random_rows = [&] {
        std::vector<Tuple> rows;
        for (Element i = 0; i < m->size(); ++i) {
          for (Element j = 0; j < m->size(); ++j) {
            if (keep(rng)) rows.push_back({i, j});
          }
        }
        return Team(xy, std::move(rows));
      };
      for (int i = 0; i < 100; ++i) {
        const Team y = random_rows(), z = random_rows();
        const Team cy = oracle::team_of(xy, oracle::close(oracle::rows_of(y), perms));
        const Team cz = oracle::team_of(xy, oracle::close(oracle::rows_of(z), perms));
        itercl_total += 3;
        if (closure(y, perms).same_assignments(cy)) ++itercl;
        if (closure(cy, perms).same_assignments(cy)) ++itercl;
        if (closure(team_union(y, z), perms)
                .same_assignments(team_union(cy, cz))) {
          ++itercl;
        }
        for (const auto& f : fo) {
          ++focl_total;
          if (eval(*m, y, f, reg()) == eval(*m, cy, f, reg())) ++focl;
        }
        for (const auto& f : open) {
          ++clinc_total;
          if (eval(*m, cy, f, reg()) == eval(*m, cy, flatten(f, kinds), reg())) {
            ++clinc;
          }
        }
      }
    }
  }
  g_unsafety.computed = true;
  pass = pass && g_unsafety.separation &&
         g_unsafety.flat_ok == g_unsafety.flat_total && itercl == itercl_total &&
         focl == focl_total && clinc == clinc_total;
  detail << "separation on A1,B1,A2,B2 " << (g_unsafety.separation ? "holds" : "FAILS")
         << "; flattening " << ratio(g_unsafety.flat_ok, g_unsafety.flat_total)
         << "; Cl idempotence/union " << ratio(itercl, itercl_total)
         << "; FO invariance " << ratio(focl, focl_total)
         << "; flattening on closed teams " << ratio(clinc, clinc_total);
  return {pass, detail.str()};
}

Outcome automorphism_counts() {
  std::ostringstream detail;
  bool pass = true;
  const Model a1 = graph_An(1), b1 = graph_Bn(1);
  for (const Model* m : {&a1, &b1}) {
    auto brute = oracle::brute_automorphisms(*m);
    auto fast = automorphisms(*m);
    std::sort(brute.begin(), brute.end());
    std::sort(fast.begin(), fast.end());
    const std::size_t expected = m == &a1 ? 128 : 16;
    const bool ok = brute == fast && brute.size() == expected;
    pass = pass && ok;
    detail << (m == &a1 ? "|Aut(A1)|" : "|Aut(B1)|") << " brute " << brute.size()
           << " search " << fast.size() << "; ";
  }
  // Group orders of two dihedral 8-cycles swapped, and of one 16-cycle.
  const Model a2 = graph_An(2), b2 = graph_Bn(2);
  for (const Model* m : {&a2, &b2}) {
    const auto perms = automorphisms(*m);
    const std::size_t expected = m == &a2 ? 512 : 32;
    bool valid = std::set<Permutation>(perms.begin(), perms.end()).size() ==
                 perms.size();
    const Relation& e = *m->relation("E");
    for (const auto& p : perms) {
      for (const auto& t : e.tuples()) {
        valid = valid && e.contains(Tuple{p[t[0]], p[t[1]]});
      }
    }
    pass = pass && valid && perms.size() == expected;
    detail << (m == &a2 ? "|Aut(A2)|" : "|Aut(B2)|") << " " << perms.size()
           << "; ";
  }
  for (const Model* m : {&a1, &b1, &a2, &b2}) {
    const auto perms = m->size() <= 8 ? oracle::brute_automorphisms(*m)
                                      : automorphisms(*m);
    std::set<Element> orbit;
    for (const auto& p : perms) orbit.insert(p[0]);
    const bool transitive = orbit.size() == m->size();
    pass = pass && transitive && vertex_transitive(*m);
  }
  detail << "vertex-transitive: A1 B1 A2 B2";
  return {pass, detail.str()};
}

Outcome substitute_inseparability() {
  if (!g_unsafety.computed) unsafety();
  const bool flat = g_unsafety.flat_ok == g_unsafety.flat_total;
  return {g_unsafety.separation && flat,
          std::string("constancy sentence separates A_n from B_n for n=1,2: ") +
              (g_unsafety.separation ? "yes" : "no") +
              "; every FO(inc1) corpus sentence agrees with its flattening: " +
              ratio(g_unsafety.flat_ok, g_unsafety.flat_total) +
              " (substitute for the general inseparability argument)"};
}

}  // namespace
}  // namespace teamsem

int main(int argc, char** argv) {
  using namespace teamsem;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> all = {
      {"flatness of first-order formulas", flatness},
      {"locality under padded team domains", locality},
      {"hook law", hook_law},
      {"closure preservation", closure_preservation},
      {"macro equivalences", macro_equivalences},
      {"rewrite soundness and counting invariants", rewrite_soundness},
      {"totality elimination", totality_elimination},
      {"constancy versus inclusion on A_n/B_n", unsafety},
      {"automorphism counts", automorphism_counts},
      {"substituted inseparability check", substitute_inseparability},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failures = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    if (!only.empty() && !only.count(id)) continue;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = all[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = secs < kLimitSeconds[id];
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    char t[32];
    std::snprintf(t, sizeof t, "%.1fs", secs);
    std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << " "
              << all[i].first << " (" << o.detail << ") [" << t
              << (in_time ? "" : " over limit") << "]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
