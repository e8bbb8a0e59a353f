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


#include "oracle.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "teamsem/formula_ops.h"

namespace teamsem::oracle {

namespace {

Element value(const Model& m, const Assignment& s, const Term& t) {
  if (t.is_variable()) return s.at(t.name);
  return *m.constant(t.name);
}

Tuple values(const Model& m, const Assignment& s, const Terms& ts) {
  Tuple out;
  for (const auto& t : ts) out.push_back(value(m, s, t));
  return out;
}

std::vector<Assignment> as_vector(const Rows& x) {
  return {x.begin(), x.end()};
}

bool builtin_holds(DependencyKind kind, const Model& m,
                   const std::set<Tuple>& p, std::size_t k) {
  switch (kind) {
    case DependencyKind::kConstancy:
      return p.size() <= 1;
    case DependencyKind::kTotality: {
      std::size_t all = 1;
      for (std::size_t i = 0; i < k; ++i) all *= m.size();
      return p.size() == all;
    }
    case DependencyKind::kNonemptiness:
      return !p.empty();
    case DependencyKind::kNonconstancy:
      return p.size() >= 2;
    case DependencyKind::kInclusion:
    case DependencyKind::kExclusion: {
      const std::size_t h = k / 2;
      std::set<Tuple> left, right;
      for (const auto& t : p) {
        left.insert(Tuple(t.begin(), t.begin() + h));
        right.insert(Tuple(t.begin() + h, t.end()));
      }
      if (kind == DependencyKind::kInclusion) {
        return std::includes(right.begin(), right.end(), left.begin(),
                             left.end());
      }
      for (const auto& t : left) {
        if (right.count(t)) return false;
      }
      return true;
    }
    case DependencyKind::kFunctional: {
      std::map<Tuple, Element> f;
      for (const auto& t : p) {
        Tuple key(t.begin(), t.end() - 1);
        auto [it, fresh] = f.emplace(key, t.back());
        if (!fresh && it->second != t.back()) return false;
      }
      return true;
    }
    case DependencyKind::kUserDefined:
      break;
  }
  throw std::logic_error("not a builtin");
}

}  // namespace

Rows rows_of(const Team& t) {
  Rows out;
  for (std::size_t i = 0; i < t.size(); ++i) out.insert(t.assignment(i));
  return out;
}

Team team_of(const std::vector<std::string>& vars, const Rows& rows) {
  if (vars.empty()) return rows.empty() ? Team() : Team::epsilon();
  std::vector<Tuple> out;
  for (const auto& s : rows) {
    Tuple t;
    for (const auto& v : vars) t.push_back(s.at(v));
    out.push_back(std::move(t));
  }
  return Team(vars, std::move(out));
}

bool tarski(const Model& m, const Assignment& s, const Formula& f,
            const std::string& symbol, const std::set<Tuple>* relation) {
  switch (f.kind()) {
    case FormulaKind::kLiteral: {
      bool v = true;
      if (f.literal_kind() == LiteralKind::kEquality) {
        v = value(m, s, f.terms()[0]) == value(m, s, f.terms()[1]);
      } else if (f.literal_kind() == LiteralKind::kRelation) {
        const Tuple t = values(m, s, f.terms());
        if (relation && f.name() == symbol) {
          v = relation->count(t) > 0;
        } else {
          v = m.relation(f.name())->contains(t);
        }
      }
      return f.negated() ? !v : v;
    }
    case FormulaKind::kAnd:
      return tarski(m, s, f.lhs(), symbol, relation) &&
             tarski(m, s, f.rhs(), symbol, relation);
    case FormulaKind::kOr:
      return tarski(m, s, f.lhs(), symbol, relation) ||
             tarski(m, s, f.rhs(), symbol, relation);
    case FormulaKind::kExists:
    case FormulaKind::kForall: {
      const bool ex = f.is(FormulaKind::kExists);
      Assignment t = s;
      for (Element a = 0; a < m.size(); ++a) {
        t[f.var()] = a;
        if (tarski(m, t, f.body(), symbol, relation) == ex) return ex;
      }
      return !ex;
    }
    case FormulaKind::kHook:
      return !tarski(m, s, f.antecedent(), symbol, relation) ||
             tarski(m, s, f.consequent(), symbol, relation);
    default:
      throw std::logic_error("tarski: not first-order");
  }
}

std::set<Tuple> projection(const Model& m, const Rows& x, const Terms& terms) {
  std::set<Tuple> out;
  for (const auto& s : x) out.insert(values(m, s, terms));
  return out;
}

bool satisfies(const Model& m, const Rows& x, const Formula& f,
               const Registry& registry) {
  switch (f.kind()) {
    case FormulaKind::kLiteral:
      return std::all_of(x.begin(), x.end(), [&](const Assignment& s) {
        return tarski(m, s, f);
      });
    case FormulaKind::kAnd:
      return satisfies(m, x, f.lhs(), registry) &&
             satisfies(m, x, f.rhs(), registry);
    case FormulaKind::kOr: {
      // Each row goes to the left part, the right part, or both.
      const auto rows = as_vector(x);
      std::vector<int> where(rows.size(), 0);
      while (true) {
        Rows y, z;
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (where[i] != 1) y.insert(rows[i]);
          if (where[i] != 0) z.insert(rows[i]);
        }
        if (satisfies(m, y, f.lhs(), registry) &&
            satisfies(m, z, f.rhs(), registry)) {
          return true;
        }
        std::size_t i = 0;
        while (i < where.size() && where[i] == 2) where[i++] = 0;
        if (i == where.size()) return false;
        ++where[i];
      }
    }
    case FormulaKind::kExists: {
      const auto rows = as_vector(x);
      const unsigned full = (1u << m.size()) - 1;
      std::vector<unsigned> choice(rows.size(), 1);
      while (true) {
        Rows y;
        for (std::size_t i = 0; i < rows.size(); ++i) {
          for (Element a = 0; a < m.size(); ++a) {
            if (choice[i] >> a & 1) {
              Assignment s = rows[i];
              s[f.var()] = a;
              y.insert(std::move(s));
            }
          }
        }
        if (satisfies(m, y, f.body(), registry)) return true;
        std::size_t i = 0;
        while (i < choice.size() && choice[i] == full) choice[i++] = 1;
        if (i == choice.size()) return false;
        ++choice[i];
      }
    }
    case FormulaKind::kForall: {
      Rows y;
      for (const auto& s : x) {
        for (Element a = 0; a < m.size(); ++a) {
          Assignment t = s;
          t[f.var()] = a;
          y.insert(std::move(t));
        }
      }
      return satisfies(m, y, f.body(), registry);
    }
    case FormulaKind::kHook: {
      Rows y;
      for (const auto& s : x) {
        if (tarski(m, s, f.antecedent())) y.insert(s);
      }
      return satisfies(m, y, f.consequent(), registry);
    }
    case FormulaKind::kDiamond: {
      const auto rows = as_vector(x);
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << rows.size());
           ++mask) {
        Rows y;
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (mask >> i & 1) y.insert(rows[i]);
        }
        if (satisfies(m, y, f.body(), registry)) return true;
      }
      return false;
    }
    case FormulaKind::kDepAtom: {
      const auto d = registry.lookup(f.name(), f.terms().size());
      if (!d) throw std::logic_error("unknown dependency " + f.name());
      const auto p = projection(m, x, f.terms());
      if (d->kind != DependencyKind::kUserDefined) {
        return builtin_holds(d->kind, m, p, d->arity);
      }
      return tarski(m, {}, d->sentence, d->relation_symbol, &p);
    }
    case FormulaKind::kGenericDep: {
      const auto p = projection(m, x, f.terms());
      return tarski(m, {}, f.sentence(), f.name(), &p);
    }
  }
  return false;
}

std::vector<Permutation> brute_automorphisms(const Model& m) {
  Permutation p(m.size());
  std::iota(p.begin(), p.end(), Element{0});
  std::vector<Permutation> out;
  do {
    bool ok = true;
    for (const auto& [name, r] : m.relations()) {
      for (const auto& t : r.tuples()) {
        Tuple image;
        for (Element e : t) image.push_back(p[e]);
        if (!r.contains(image)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool connected(const Model& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Element>> adj(n);
  if (const Relation* e = m.relation("E")) {
    for (const auto& t : e->tuples()) {
      adj[t[0]].push_back(t[1]);
      adj[t[1]].push_back(t[0]);
    }
  }
  std::vector<bool> seen(n, false);
  std::queue<Element> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!todo.empty()) {
    const Element u = todo.front();
    todo.pop();
    for (Element v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        todo.push(v);
      }
    }
  }
  return count == n;
}

Rows close(const Rows& x, const std::vector<Permutation>& perms) {
  Rows out;
  for (const auto& s : x) {
    for (const auto& p : perms) {
      Assignment t;
      for (const auto& [v, e] : s) t[v] = p[e];
      out.insert(std::move(t));
    }
  }
  return out;
}

namespace {

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

Formula gen(std::mt19937_64& rng, const GenOptions& o, int depth,
            std::vector<std::string>& scope) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const bool leaf = depth == 0 || u(rng) < 0.2;
  if (leaf) {
    if (!o.deps.empty() && !scope.empty() && u(rng) < 0.45) {
      const auto& [name, k] = pick(rng, o.deps);
      Terms ts;
      for (std::size_t i = 0; i < k; ++i) ts.push_back(Term::var(pick(rng, scope)));
      std::optional<std::size_t> split;
      if (name == "inc" || name == "exc") split = k / 2;
      if (name == "fdep") split = k - 1;
      return Formula::dep(name, std::move(ts), split);
    }
    return random_fo_literal(rng, scope, o.negative_literals);
  }
  const double r = u(rng);
  if (r < o.quantifier_weight) {
    const std::string v = pick(rng, o.bound);
    const bool added = std::find(scope.begin(), scope.end(), v) == scope.end();
    if (added) scope.push_back(v);
    Formula body = gen(rng, o, depth - 1, scope);
    if (added) scope.pop_back();
    return u(rng) < 0.5 ? Formula::exists(v, body) : Formula::forall(v, body);
  }
  if (o.diamonds && r < o.quantifier_weight + 0.08) {
    return Formula::diamond(gen(rng, o, depth - 1, scope));
  }
  if (o.hooks && r < o.quantifier_weight + 0.2) {
    GenOptions fo = o;
    fo.deps.clear();
    fo.hooks = fo.diamonds = false;
    Formula theta = gen(rng, fo, std::max(0, depth - 2), scope);
    return Formula::hook(theta, gen(rng, o, depth - 1, scope));
  }
  Formula a = gen(rng, o, depth - 1, scope);
  Formula b = gen(rng, o, depth - 1, scope);
  return u(rng) < 0.5 ? Formula::conj(a, b) : Formula::disj(a, b);
}

}  // namespace

Formula random_fo_literal(std::mt19937_64& rng,
                          const std::vector<std::string>& scope,
                          bool negative) {
  std::uniform_int_distribution<int> kind(0, 9);
  if (scope.empty()) return kind(rng) < 8 ? Formula::truth() : Formula::truth(true);
  const bool neg = negative && kind(rng) < 4;
  const int k = kind(rng);
  const Term a = Term::var(pick(rng, scope));
  const Term b = Term::var(pick(rng, scope));
  if (k < 6) return Formula::relation("E", {a, b}, neg);
  if (k < 9) return Formula::equality(a, b, neg);
  return Formula::truth();
}

Formula random_formula(std::mt19937_64& rng, const GenOptions& options) {
  std::vector<std::string> scope = options.free;
  return gen(rng, options, options.depth, scope);
}

}  // namespace teamsem::oracle
