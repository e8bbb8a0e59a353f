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

#ifndef TEAMSEM_FORMULA_H_
#define TEAMSEM_FORMULA_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace teamsem {

// A term is a variable or a constant symbol naming a domain element.
struct Term {
  enum class Kind : std::uint8_t { kVariable, kConstant };

  Kind kind = Kind::kVariable;
  std::string name;

  static Term var(std::string name) {
    return Term{Kind::kVariable, std::move(name)};
  }
  static Term constant(std::string name) {
    return Term{Kind::kConstant, std::move(name)};
  }
  bool is_variable() const { return kind == Kind::kVariable; }
  bool is_constant() const { return kind == Kind::kConstant; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

using Terms = std::vector<Term>;

Terms var_terms(const std::vector<std::string>& names);

enum class FormulaKind : std::uint8_t {
  kLiteral,
  kAnd,
  kOr,
  kExists,
  kForall,
  kHook,
  kDiamond,
  kDepAtom,
  kGenericDep,
};

enum class LiteralKind : std::uint8_t { kRelation, kEquality, kTruth };

// Immutable formula in negation normal form. Copies share structure.
//
// Child layout used by paths: And/Or have children 0 and 1; quantifiers and
// Diamond have child 0 (the body); Hook has child 0 (antecedent) and child 1
// (consequent). The sentence of a GenericDep is a separate closed scope and is
// not a child.
class Formula {
 public:
  // The truth literal.
  Formula();

  static Formula relation(std::string name, Terms args, bool negated = false);
  static Formula equality(Term lhs, Term rhs, bool negated = false);
  static Formula truth(bool negated = false);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula exists(std::string var, Formula body);
  static Formula forall(std::string var, Formula body);
  static Formula hook(Formula antecedent, Formula consequent);
  static Formula diamond(Formula body);
  // split is the position of the ';' separator for atoms written inc(x;y).
  static Formula dep(std::string name, Terms args,
                     std::optional<std::size_t> split = std::nullopt);
  static Formula generic_dep(std::string relation_symbol, Terms args,
                             Formula sentence);

  FormulaKind kind() const { return node_->kind; }
  bool is(FormulaKind k) const { return node_->kind == k; }
  bool is_binary() const {
    return is(FormulaKind::kAnd) || is(FormulaKind::kOr) ||
           is(FormulaKind::kHook);
  }
  bool is_quantifier() const {
    return is(FormulaKind::kExists) || is(FormulaKind::kForall);
  }
  bool is_atom() const {
    return is(FormulaKind::kDepAtom) || is(FormulaKind::kGenericDep);
  }

  LiteralKind literal_kind() const { return node_->literal_kind; }
  bool negated() const { return node_->negated; }
  bool is_top() const {
    return is(FormulaKind::kLiteral) &&
           literal_kind() == LiteralKind::kTruth && !negated();
  }

  // Relation name, dependency name, generic relation symbol or bound variable.
  const std::string& name() const { return node_->name; }
  const std::string& var() const { return node_->name; }
  const Terms& terms() const { return node_->terms; }
  std::optional<std::size_t> split() const { return node_->split; }

  std::size_t num_children() const { return node_->children.size(); }
  const Formula& child(std::size_t i) const { return node_->children[i]; }
  const Formula& lhs() const { return child(0); }
  const Formula& rhs() const { return child(1); }
  const Formula& body() const { return child(0); }
  const Formula& antecedent() const { return child(0); }
  const Formula& consequent() const { return child(1); }
  const Formula& sentence() const { return node_->sentence[0]; }

  // Copy with child i replaced.
  Formula with_child(std::size_t i, Formula child) const;

  // Structural equality. The ';' position of a DepAtom is presentation only
  // and is ignored.
  bool operator==(const Formula& other) const;
  bool same_node(const Formula& other) const { return node_ == other.node_; }
  const void* identity() const { return node_.get(); }
  std::size_t size() const { return node_->size; }

 private:
  struct Node {
    FormulaKind kind = FormulaKind::kLiteral;
    LiteralKind literal_kind = LiteralKind::kTruth;
    bool negated = false;
    std::string name;
    Terms terms;
    std::optional<std::size_t> split;
    std::vector<Formula> children;
    // Holds the GenericDep sentence (one element), kept apart from children.
    std::vector<Formula> sentence;
    std::size_t size = 1;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Node node);

  std::shared_ptr<const Node> node_;
};

// Right-nested conjunction; top when empty.
Formula conjoin(const std::vector<Formula>& parts);
// Right-nested disjunction; !top when empty.
Formula disjoin(const std::vector<Formula>& parts);
// Conjunction of componentwise equalities; top for empty tuples.
Formula tuple_equal(const Terms& a, const Terms& b);
// Disjunction of componentwise inequalities; !top for empty tuples.
Formula tuple_distinct(const Terms& a, const Terms& b);
Formula exists_all(const std::vector<std::string>& vars, Formula body);
Formula forall_all(const std::vector<std::string>& vars, Formula body);

// Top-level conjuncts of f (f itself when it is not a conjunction).
std::vector<Formula> conjuncts(const Formula& f);

// Relation names with arities plus constant symbols.
struct Signature {
  std::map<std::string, std::size_t> relations;
  std::set<std::string> constants;

  bool operator==(const Signature&) const = default;
};

using Path = std::vector<std::uint8_t>;

const Formula& subformula_at(const Formula& f, const Path& path);
Formula replace_at(const Formula& f, const Path& path, Formula replacement);

std::string path_to_string(const Path& path);

// Defined with the printer.
std::ostream& operator<<(std::ostream& os, const Formula& f);

}  // namespace teamsem

#endif  // TEAMSEM_FORMULA_H_
