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


#include "teamsem/structures.h"

#include <algorithm>
#include <queue>

#include "teamsem/errors.h"
#include "teamsem/text_io.h"

namespace teamsem {

Model graph_model(std::vector<std::string> vertices,
                  const std::vector<std::pair<Element, Element>>& edges) {
  Model m(std::move(vertices));
  std::vector<Tuple> tuples;
  for (const auto& [a, b] : edges) {
    tuples.push_back({a, b});
    tuples.push_back({b, a});
  }
  m.add_relation("E", Relation::from_tuples(2, m.size(), std::move(tuples)));
  return m;
}

namespace {

void check_n(int n) {
  if (n < 1) throw Error("n must be at least 1");
  if (n > 12) throw Error("n must be at most 12");
}

void add_cycle(std::vector<std::pair<Element, Element>>& edges,
               std::size_t start, std::size_t length) {
  for (std::size_t i = 0; i < length; ++i) {
    edges.emplace_back(static_cast<Element>(start + i),
                       static_cast<Element>(start + (i + 1) % length));
  }
}

}  // namespace

Model graph_An(int n) {
  check_n(n);
  const std::size_t length = std::size_t{1} << (n + 1);
  std::vector<std::string> names;
  for (int c = 0; c < 2; ++c) {
    for (std::size_t i = 0; i < length; ++i) {
      names.push_back("c" + std::to_string(c) + "_" + std::to_string(i));
    }
  }
  std::vector<std::pair<Element, Element>> edges;
  add_cycle(edges, 0, length);
  add_cycle(edges, length, length);
  return graph_model(std::move(names), edges);
}

Model graph_Bn(int n) {
  check_n(n);
  const std::size_t length = std::size_t{1} << (n + 2);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < length; ++i) {
    names.push_back("v_" + std::to_string(i));
  }
  std::vector<std::pair<Element, Element>> edges;
  add_cycle(edges, 0, length);
  return graph_model(std::move(names), edges);
}

namespace {

class AutomorphismSearch {
 public:
  AutomorphismSearch(const Model& m, std::size_t max_results)
      : n_(m.size()), max_results_(max_results) {
    for (const auto& [name, r] : m.relations()) rels_.push_back(&r);
    // Tuples are checked once their largest element is mapped.
    due_.assign(n_, {});
    profile_.assign(n_, std::vector<std::size_t>(rels_.size() * 8, 0));
    for (std::size_t k = 0; k < rels_.size(); ++k) {
      for (const auto& t : rels_[k]->tuples()) {
        const Element top = *std::max_element(t.begin(), t.end());
        due_[top].push_back({k, &t});
        for (std::size_t pos = 0; pos < t.size(); ++pos) {
          auto& p = profile_[t[pos]];
          const std::size_t slot = k * 8 + std::min<std::size_t>(pos, 7);
          ++p[slot];
        }
      }
    }
  }

  std::vector<Permutation> run() {
    image_.assign(n_, 0);
    taken_.assign(n_, false);
    extend(0);
    return std::move(out_);
  }

 private:
  void extend(std::size_t i) {
    if (i == n_) {
      if (out_.size() >= max_results_) {
        throw BudgetExceeded("more than " + std::to_string(max_results_) +
                             " automorphisms");
      }
      out_.push_back(image_);
      return;
    }
    for (std::size_t c = 0; c < n_; ++c) {
      if (taken_[c] || profile_[c] != profile_[i]) continue;
      image_[i] = static_cast<Element>(c);
      if (!consistent(i)) continue;
      taken_[c] = true;
      extend(i + 1);
      taken_[c] = false;
    }
  }

  bool consistent(std::size_t i) {
    Tuple mapped;
    for (const auto& [k, t] : due_[i]) {
      mapped.resize(t->size());
      for (std::size_t j = 0; j < t->size(); ++j) mapped[j] = image_[(*t)[j]];
      if (!rels_[k]->contains(mapped)) return false;
    }
    return true;
  }

  std::size_t n_;
  std::size_t max_results_;
  std::vector<const Relation*> rels_;
  std::vector<std::vector<std::pair<std::size_t, const Tuple*>>> due_;
  std::vector<std::vector<std::size_t>> profile_;
  Permutation image_;
  std::vector<bool> taken_;
  std::vector<Permutation> out_;
};

}  // namespace

std::vector<Permutation> automorphisms(const Model& m,
                                       std::size_t max_results) {
  return AutomorphismSearch(m, max_results).run();
}

bool vertex_transitive(const Model& m) {
  if (m.size() == 0) return true;
  std::vector<bool> reached(m.size(), false);
  for (const auto& p : automorphisms(m)) reached[p[0]] = true;
  return std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
}

Team closure(const Team& x, const std::vector<Permutation>& automorphisms) {
  std::vector<Tuple> rows;
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto r = x.row(i);
    for (const auto& p : automorphisms) {
      Tuple t(r.size());
      for (std::size_t c = 0; c < r.size(); ++c) t[c] = p[r[c]];
      rows.push_back(std::move(t));
    }
  }
  if (x.width() == 0) return x;
  return Team(x.vars(), std::move(rows));
}

Team closure(const Team& x, const Model& m) {
  return closure(x, automorphisms(m));
}

Formula flatten(const Formula& f, const std::set<std::string>& kinds) {
  if (f.is(FormulaKind::kDepAtom) && kinds.count(f.name())) {
    return Formula::truth();
  }
  Formula out = f;
  for (std::size_t i = 0; i < f.num_children(); ++i) {
    out = out.with_child(i, flatten(f.child(i), kinds));
  }
  return out;
}

Formula nonconn_sentence() {
  return parse_formula(
      "exists x y. (const(y) /\\ (forall z. (E(x,z) => inc(z ; x)) /\\ "
      "x != y))");
}

bool is_connected(const Model& m, const std::string& relation) {
  const Relation* r = m.relation(relation);
  if (!r || r->arity() != 2) {
    throw Error("connectivity needs a binary relation " + relation);
  }
  const std::size_t n = m.size();
  if (n == 0) return true;
  std::vector<std::vector<Element>> adj(n);
  for (const auto& t : r->tuples()) {
    adj[t[0]].push_back(t[1]);
    adj[t[1]].push_back(t[0]);
  }
  std::vector<bool> seen(n, false);
  std::queue<Element> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!todo.empty()) {
    const Element v = todo.front();
    todo.pop();
    for (Element w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        todo.push(w);
      }
    }
  }
  return count == n;
}

}  // namespace teamsem
