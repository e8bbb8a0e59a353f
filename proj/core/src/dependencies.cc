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

#include "teamsem/dependencies.h"

#include <algorithm>
#include <cstdint>

#include "teamsem/errors.h"
#include "teamsem/semantics.h"

namespace teamsem {

namespace {

constexpr FlagState kYes = FlagState::kAsserted;
constexpr FlagState kNo = FlagState::kRefuted;

std::vector<std::string> names(const std::string& base, std::size_t k) {
  if (k == 1) return {base};
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= k; ++i) out.push_back(base + std::to_string(i));
  return out;
}

Formula rel(const std::vector<std::string>& a,
            const std::vector<std::string>& b = {}, bool negated = false) {
  Terms ts = var_terms(a);
  for (const auto& n : b) ts.push_back(Term::var(n));
  return Formula::relation("R", std::move(ts), negated);
}

std::vector<std::string> cat(std::vector<std::string> a,
                             const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

ClosureFlags flags_for(DependencyKind kind) {
  switch (kind) {
    case DependencyKind::kConstancy:
    case DependencyKind::kExclusion:
    case DependencyKind::kFunctional:
      return {kYes, kNo, kNo, kYes};
    case DependencyKind::kTotality:
    case DependencyKind::kNonemptiness:
    case DependencyKind::kNonconstancy:
      return {kNo, kYes, kYes, kNo};
    case DependencyKind::kInclusion:
      return {kNo, kNo, kYes, kYes};
    case DependencyKind::kUserDefined:
      break;
  }
  return {};
}

const std::pair<const char*, DependencyKind> kFamilies[] = {
    {"const", DependencyKind::kConstancy},
    {"all", DependencyKind::kTotality},
    {"ne", DependencyKind::kNonemptiness},
    {"nc", DependencyKind::kNonconstancy},
    {"inc", DependencyKind::kInclusion},
    {"exc", DependencyKind::kExclusion},
    {"fdep", DependencyKind::kFunctional},
};

}  // namespace

const char* to_string(FlagState s) {
  switch (s) {
    case FlagState::kAsserted:
      return "asserted";
    case FlagState::kRefuted:
      return "refuted";
    case FlagState::kUnknown:
      break;
  }
  return "unknown";
}

std::optional<DependencySpec> make_builtin(DependencyKind kind,
                                           std::size_t arity) {
  if (arity == 0) return std::nullopt;
  DependencySpec d;
  d.arity = arity;
  d.kind = kind;
  d.flags = flags_for(kind);
  const std::size_t k = arity;
  switch (kind) {
    case DependencyKind::kConstancy: {
      d.name = "const";
      auto xs = names("x", k), ys = names("y", k);
      d.sentence = forall_all(
          cat(xs, ys),
          Formula::disj(rel(xs, {}, true),
                        Formula::disj(rel(ys, {}, true),
                                      tuple_equal(var_terms(xs),
                                                  var_terms(ys)))));
      break;
    }
    case DependencyKind::kTotality: {
      d.name = "all";
      auto vs = names("v", k);
      d.sentence = forall_all(vs, rel(vs));
      break;
    }
    case DependencyKind::kNonemptiness: {
      d.name = "ne";
      auto vs = names("v", k);
      d.sentence = exists_all(vs, rel(vs));
      break;
    }
    case DependencyKind::kNonconstancy: {
      d.name = "nc";
      auto xs = names("x", k), ys = names("y", k);
      d.sentence = exists_all(
          cat(xs, ys),
          Formula::conj(rel(xs),
                        Formula::conj(rel(ys), tuple_distinct(var_terms(xs),
                                                              var_terms(ys)))));
      break;
    }
    case DependencyKind::kInclusion: {
      if (k % 2 != 0) return std::nullopt;
      d.name = "inc";
      d.split = k / 2;
      auto us = names("u", k / 2), vs = names("v", k / 2),
           ws = names("w", k / 2);
      d.sentence = forall_all(
          cat(us, vs),
          Formula::disj(rel(us, vs, true), exists_all(ws, rel(ws, us))));
      break;
    }
    case DependencyKind::kExclusion: {
      if (k % 2 != 0) return std::nullopt;
      d.name = "exc";
      d.split = k / 2;
      auto us = names("u", k / 2), vs = names("v", k / 2);
      std::vector<std::string> us2, vs2;
      for (const auto& u : us) us2.push_back(u + "'");
      for (const auto& v : vs) vs2.push_back(v + "'");
      d.sentence = forall_all(
          cat(cat(us, vs), cat(us2, vs2)),
          Formula::disj(
              rel(us, vs, true),
              Formula::disj(
                  rel(us2, vs2, true),
                  Formula::conj(tuple_distinct(var_terms(us), var_terms(vs2)),
                                tuple_distinct(var_terms(us2),
                                               var_terms(vs))))));
      break;
    }
    case DependencyKind::kFunctional: {
      if (k < 2) return std::nullopt;
      d.name = "fdep";
      d.split = k - 1;
      auto us = k == 2 ? std::vector<std::string>{"u"} : names("u", k - 1);
      d.sentence = forall_all(
          cat(us, {"v1", "v2"}),
          Formula::disj(
              rel(us, {"v1"}, true),
              Formula::disj(rel(us, {"v2"}, true),
                            Formula::equality(Term::var("v1"),
                                              Term::var("v2")))));
      break;
    }
    case DependencyKind::kUserDefined:
      return std::nullopt;
  }
  return d;
}

Registry builtin_registry() {
  Registry r;
  for (const auto& [name, kind] : kFamilies) {
    r.builtin_families_.emplace(name, kind);
    for (std::size_t k = 1; k <= 3; ++k) {
      if (auto d = make_builtin(kind, k)) {
        r.specs_[{d->name, k}] = std::make_shared<const DependencySpec>(*d);
      }
    }
  }
  return r;
}

DependencyPtr Registry::lookup(std::string_view name, std::size_t arity) const {
  auto it = specs_.find(std::make_pair(std::string(name), arity));
  if (it != specs_.end()) return it->second;
  auto fam = builtin_families_.find(name);
  if (fam == builtin_families_.end()) return nullptr;
  auto d = make_builtin(fam->second, arity);
  if (!d) return nullptr;
  return std::make_shared<const DependencySpec>(std::move(*d));
}

bool Registry::has_name(std::string_view name) const {
  if (builtin_families_.count(name)) return true;
  for (const auto& [key, spec] : specs_) {
    if (key.first == name) return true;
  }
  return false;
}

bool Registry::is_builtin(std::string_view name) const {
  return builtin_families_.count(name) > 0;
}

std::vector<std::string> Registry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, kind] : builtin_families_) out.push_back(name);
  for (const auto& [key, spec] : specs_) {
    if (std::find(out.begin(), out.end(), key.first) == out.end()) {
      out.push_back(key.first);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void Registry::add(DependencySpec spec) {
  if (has_name(spec.name)) {
    throw Error("dependency '" + spec.name + "' is already defined");
  }
  auto key = std::make_pair(spec.name, spec.arity);
  specs_[std::move(key)] =
      std::make_shared<const DependencySpec>(std::move(spec));
}

bool eval_dep(const Model& m, const Team& x, const DependencySpec& d,
              const Terms& terms) {
  if (terms.size() != d.arity) {
    throw EvalError("dependency '" + d.name + "' expects " +
                    std::to_string(d.arity) + " terms, got " +
                    std::to_string(terms.size()));
  }
  const Relation r = project(x, terms, m);
  return eval_tarski(m, Assignment{}, d.sentence,
                     Expansion{d.relation_symbol, &r});
}

ClosureReport verify_closure_flags(const DependencySpec& d, std::size_t bound,
                                   std::size_t max_teams) {
  ClosureReport report;
  report.name = d.name;
  report.arity = d.arity;
  report.bound = bound;
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= d.arity; ++i) {
    vars.push_back("v" + std::to_string(i));
  }
  const Terms terms = var_terms(vars);

  auto refute = [](FlagCheck& check, std::size_t n, std::vector<Team> teams,
                   std::string why) {
    if (check.result == FlagState::kRefuted) return;
    check.result = FlagState::kRefuted;
    check.model_size = n;
    check.witnesses = std::move(teams);
    check.explanation = std::move(why);
  };

  for (std::size_t n = 1; n <= bound; ++n) {
    const Model m = equality_model(n);
    std::vector<Tuple> all_rows;
    Tuple t(d.arity, 0);
    std::size_t rows = 1;
    for (std::size_t i = 0; i < d.arity; ++i) rows *= n;
    if (rows >= 63 || (std::uint64_t{1} << rows) > max_teams) {
      throw BudgetExceeded("verify_closure_flags: too many teams at size " +
                           std::to_string(n));
    }
    for (std::size_t r = 0; r < rows; ++r) {
      std::size_t code = r;
      for (std::size_t i = d.arity; i-- > 0;) {
        t[i] = static_cast<Element>(code % n);
        code /= n;
      }
      all_rows.push_back(t);
    }
    const std::uint64_t num = std::uint64_t{1} << rows;
    auto team_of = [&](std::uint64_t mask) {
      std::vector<Tuple> chosen;
      for (std::size_t r = 0; r < rows; ++r) {
        if (mask >> r & 1) chosen.push_back(all_rows[r]);
      }
      return Team(vars, std::move(chosen));
    };
    std::vector<bool> sat(num);
    for (std::uint64_t mask = 0; mask < num; ++mask) {
      sat[mask] = eval_dep(m, team_of(mask), d, terms);
    }
    if (!sat[0]) {
      refute(report.empty_team, n, {team_of(0)}, "fails on the empty team");
    }
    for (std::uint64_t x = 0; x < num; ++x) {
      if (!sat[x]) continue;
      // Proper subsets of x.
      for (std::uint64_t y = (x - 1) & x; y != x; y = (y - 1) & x) {
        if (!sat[y]) {
          refute(report.downward_closed, n, {team_of(x), team_of(y)},
                 "holds on the first team but not on its subteam");
          break;
        }
        if (y == 0) break;
      }
      // Proper supersets of x.
      const std::uint64_t rest = (num - 1) & ~x;
      for (std::uint64_t z = rest; z != 0; z = (z - 1) & rest) {
        if (!sat[x | z]) {
          refute(report.upward_closed, n, {team_of(x), team_of(x | z)},
                 "holds on the first team but not on its superteam");
          break;
        }
      }
      for (std::uint64_t y = x + 1; y < num; ++y) {
        if (sat[y] && !sat[x | y]) {
          refute(report.union_closed, n,
                 {team_of(x), team_of(y), team_of(x | y)},
                 "holds on the first two teams but not on their union");
          break;
        }
      }
    }
  }
  for (FlagCheck* c : {&report.downward_closed, &report.upward_closed,
                       &report.union_closed, &report.empty_team}) {
    if (c->result == FlagState::kUnknown) c->result = FlagState::kAsserted;
  }
  return report;
}

}  // namespace teamsem
