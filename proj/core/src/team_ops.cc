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

#include <set>

#include "teamsem/errors.h"
#include "teamsem/formula_ops.h"
#include "teamsem/semantics.h"

namespace teamsem {

namespace {

// Columns for vs in the extended domain, appending new variables.
std::vector<std::string> extended_vars(const Team& x,
                                       const std::vector<std::string>& vs,
                                       std::vector<std::size_t>& cols) {
  std::vector<std::string> vars = x.vars();
  cols.clear();
  for (const auto& v : vs) {
    std::size_t c = 0;
    for (; c < vars.size() && vars[c] != v; ++c) {
    }
    if (c == vars.size()) vars.push_back(v);
    cols.push_back(c);
  }
  return vars;
}

}  // namespace

Team restrict(const Model& m, const Team& x, const Formula& theta) {
  if (!is_first_order(theta)) {
    throw FormulaError("restrict: antecedent is not first-order");
  }
  std::vector<bool> keep(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    keep[i] = eval_tarski(m, x.assignment(i), theta);
  }
  return x.subteam(keep);
}

Team duplicate(const Model& m, const Team& x, const std::string& v) {
  return supplement(m, x, v, [&](const Assignment&) {
    std::vector<Element> all;
    for (std::size_t e = 0; e < m.size(); ++e) {
      all.push_back(static_cast<Element>(e));
    }
    return all;
  });
}

Team supplement(
    const Model& m, const Team& x, const std::string& v,
    const std::function<std::vector<Element>(const Assignment&)>& h) {
  return supplement(m, x, std::vector<std::string>{v},
                    [&](const Assignment& s) {
                      std::vector<Tuple> out;
                      for (Element e : h(s)) out.push_back({e});
                      return out;
                    });
}

Team supplement(
    const Model& m, const Team& x, const std::vector<std::string>& vs,
    const std::function<std::vector<Tuple>(const Assignment&)>& h) {
  std::set<std::string> distinct(vs.begin(), vs.end());
  if (distinct.size() != vs.size()) {
    throw Error("supplement: repeated variable");
  }
  std::vector<std::size_t> cols;
  std::vector<std::string> vars = extended_vars(x, vs, cols);
  std::vector<Element> cells;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::vector<Tuple> choice = h(x.assignment(i));
    if (choice.empty()) throw Error("supplement: empty choice set");
    Tuple base = x.row_tuple(i);
    base.resize(vars.size(), 0);
    for (const auto& t : choice) {
      if (t.size() != vs.size()) throw Error("supplement: tuple arity");
      Tuple r = base;
      for (std::size_t k = 0; k < t.size(); ++k) {
        if (t[k] >= m.size()) throw Error("supplement: element out of domain");
        r[cols[k]] = t[k];
      }
      cells.insert(cells.end(), r.begin(), r.end());
    }
  }
  if (vars.empty()) return x;
  return Team::from_cells(std::move(vars), std::move(cells));
}

Relation project(const Team& x, const Terms& terms, const Model& m) {
  std::vector<std::optional<std::size_t>> cols;
  std::vector<Element> consts;
  for (const auto& t : terms) {
    if (t.is_variable()) {
      auto c = x.column(t.name);
      if (!c) throw EvalError("unbound variable '" + t.name + "'");
      cols.push_back(c);
      consts.push_back(0);
    } else {
      auto e = m.constant(t.name);
      if (!e) throw EvalError("unresolvable constant '" + t.name + "'");
      cols.push_back(std::nullopt);
      consts.push_back(*e);
    }
  }
  Relation r(terms.size(), m.size());
  Tuple t(terms.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto row = x.row(i);
    for (std::size_t k = 0; k < terms.size(); ++k) {
      t[k] = cols[k] ? row[*cols[k]] : consts[k];
    }
    r.insert(t);
  }
  return r;
}

}  // namespace teamsem
