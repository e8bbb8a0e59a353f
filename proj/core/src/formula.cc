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

#include "teamsem/formula.h"

#include <sstream>
#include <utility>

#include "teamsem/errors.h"

namespace teamsem {

Terms var_terms(const std::vector<std::string>& names) {
  Terms out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(Term::var(n));
  return out;
}

Formula Formula::make(Node node) {
  node.size = 1;
  for (const auto& c : node.children) node.size += c.size();
  return Formula(std::make_shared<const Node>(std::move(node)));
}

Formula::Formula() {
  static const auto* top = new std::shared_ptr<const Node>(
      std::make_shared<const Node>(Node{}));
  node_ = *top;
}

Formula Formula::relation(std::string name, Terms args, bool negated) {
  Node n;
  n.kind = FormulaKind::kLiteral;
  n.literal_kind = LiteralKind::kRelation;
  n.negated = negated;
  n.name = std::move(name);
  n.terms = std::move(args);
  return make(std::move(n));
}

Formula Formula::equality(Term lhs, Term rhs, bool negated) {
  Node n;
  n.kind = FormulaKind::kLiteral;
  n.literal_kind = LiteralKind::kEquality;
  n.negated = negated;
  n.terms = {std::move(lhs), std::move(rhs)};
  return make(std::move(n));
}

Formula Formula::truth(bool negated) {
  if (!negated) return Formula();
  Node n;
  n.negated = true;
  return make(std::move(n));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  Node n;
  n.kind = FormulaKind::kAnd;
  n.children = {std::move(lhs), std::move(rhs)};
  return make(std::move(n));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  Node n;
  n.kind = FormulaKind::kOr;
  n.children = {std::move(lhs), std::move(rhs)};
  return make(std::move(n));
}

Formula Formula::exists(std::string var, Formula body) {
  Node n;
  n.kind = FormulaKind::kExists;
  n.name = std::move(var);
  n.children = {std::move(body)};
  return make(std::move(n));
}

Formula Formula::forall(std::string var, Formula body) {
  Node n;
  n.kind = FormulaKind::kForall;
  n.name = std::move(var);
  n.children = {std::move(body)};
  return make(std::move(n));
}

Formula Formula::hook(Formula antecedent, Formula consequent) {
  Node n;
  n.kind = FormulaKind::kHook;
  n.children = {std::move(antecedent), std::move(consequent)};
  return make(std::move(n));
}

Formula Formula::diamond(Formula body) {
  Node n;
  n.kind = FormulaKind::kDiamond;
  n.children = {std::move(body)};
  return make(std::move(n));
}

Formula Formula::dep(std::string name, Terms args,
                     std::optional<std::size_t> split) {
  Node n;
  n.kind = FormulaKind::kDepAtom;
  n.name = std::move(name);
  n.terms = std::move(args);
  n.split = split;
  return make(std::move(n));
}

Formula Formula::generic_dep(std::string relation_symbol, Terms args,
                             Formula sentence) {
  Node n;
  n.kind = FormulaKind::kGenericDep;
  n.name = std::move(relation_symbol);
  n.terms = std::move(args);
  n.sentence = {std::move(sentence)};
  return make(std::move(n));
}

Formula Formula::with_child(std::size_t i, Formula child) const {
  if (i >= num_children()) {
    throw FormulaError("with_child: no child " + std::to_string(i));
  }
  Node n = *node_;
  n.children[i] = std::move(child);
  return make(std::move(n));
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.kind != b.kind || a.literal_kind != b.literal_kind ||
      a.negated != b.negated || a.size != b.size || a.name != b.name ||
      a.terms != b.terms ||
      a.children.size() != b.children.size() ||
      a.sentence.size() != b.sentence.size()) {
    return false;
  }
  if (!a.sentence.empty() && !(a.sentence[0] == b.sentence[0])) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!(a.children[i] == b.children[i])) return false;
  }
  return true;
}

Formula conjoin(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::truth();
  Formula acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) {
    acc = Formula::conj(parts[i], acc);
  }
  return acc;
}

Formula disjoin(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::truth(true);
  Formula acc = parts.back();
  for (std::size_t i = parts.size() - 1; i-- > 0;) {
    acc = Formula::disj(parts[i], acc);
  }
  return acc;
}

Formula tuple_equal(const Terms& a, const Terms& b) {
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    parts.push_back(Formula::equality(a[i], b[i]));
  }
  return conjoin(parts);
}

Formula tuple_distinct(const Terms& a, const Terms& b) {
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    parts.push_back(Formula::equality(a[i], b[i], true));
  }
  return disjoin(parts);
}

Formula exists_all(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    body = Formula::exists(*it, std::move(body));
  }
  return body;
}

Formula forall_all(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    body = Formula::forall(*it, std::move(body));
  }
  return body;
}

std::vector<Formula> conjuncts(const Formula& f) {
  std::vector<Formula> out;
  std::vector<Formula> stack = {f};
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    if (g.is(FormulaKind::kAnd)) {
      stack.push_back(g.rhs());
      stack.push_back(g.lhs());
    } else {
      out.push_back(g);
    }
  }
  return out;
}

const Formula& subformula_at(const Formula& f, const Path& path) {
  const Formula* cur = &f;
  for (std::uint8_t i : path) {
    if (i >= cur->num_children()) {
      throw FormulaError("invalid path " + path_to_string(path));
    }
    cur = &cur->child(i);
  }
  return *cur;
}

namespace {

Formula replace_from(const Formula& f, const Path& path, std::size_t depth,
                     Formula replacement) {
  if (depth == path.size()) return replacement;
  const std::size_t i = path[depth];
  if (i >= f.num_children()) {
    throw FormulaError("invalid path " + path_to_string(path));
  }
  return f.with_child(
      i, replace_from(f.child(i), path, depth + 1, std::move(replacement)));
}

}  // namespace

Formula replace_at(const Formula& f, const Path& path, Formula replacement) {
  return replace_from(f, path, 0, std::move(replacement));
}

std::string path_to_string(const Path& path) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) os << ',';
    os << static_cast<int>(path[i]);
  }
  os << ']';
  return os.str();
}

}  // namespace teamsem
