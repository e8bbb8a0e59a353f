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

// Lax team semantics over compiled formulas.
//
// Teams are frames: columns are variable slots, rows are kept sorted and
// unique. Union-closed subformulas are decided through MaxSat(X, phi), the
// union of all subteams of X satisfying phi. For a nonempty X, X |= phi iff
// MaxSat(X, phi) = X; the empty team is decided directly.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstring>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_map>

#include "teamsem/errors.h"
#include "teamsem/formula_ops.h"
#include "teamsem/semantics.h"

namespace teamsem {

namespace {

using Mask = std::vector<bool>;

bool all_of(const Mask& m) {
  return std::all_of(m.begin(), m.end(), [](bool b) { return b; });
}
bool any_of(const Mask& m) {
  return std::any_of(m.begin(), m.end(), [](bool b) { return b; });
}

struct Frame {
  std::vector<int> slots;
  std::vector<Element> cells;
  std::size_t rows = 0;

  std::size_t width() const { return slots.size(); }
  const Element* row(std::size_t i) const {
    return cells.data() + i * width();
  }
  int col(int slot) const {
    for (std::size_t c = 0; c < slots.size(); ++c) {
      if (slots[c] == slot) return static_cast<int>(c);
    }
    return -1;
  }

  bool row_less(const Element* a, const Element* b) const {
    return std::lexicographical_compare(a, a + width(), b, b + width());
  }

  void normalize() {
    const std::size_t w = width();
    if (w == 0) {
      rows = rows ? 1 : 0;
      return;
    }
    bool ok = true;
    for (std::size_t i = 1; i < rows && ok; ++i) {
      ok = row_less(row(i - 1), row(i));
    }
    if (ok) return;
    std::vector<std::size_t> order(rows);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return row_less(row(a), row(b));
    });
    std::vector<Element> out;
    out.reserve(cells.size());
    std::size_t kept = 0;
    for (std::size_t i : order) {
      if (kept && std::equal(out.end() - w, out.end(), row(i))) continue;
      out.insert(out.end(), row(i), row(i) + w);
      ++kept;
    }
    cells = std::move(out);
    rows = kept;
  }

  // Index of r, or -1.
  long find(const Element* r) const {
    if (width() == 0) return rows ? 0 : -1;
    std::size_t lo = 0, hi = rows;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (row_less(row(mid), r)) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    if (lo < rows && std::equal(r, r + width(), row(lo))) {
      return static_cast<long>(lo);
    }
    return -1;
  }
};

Frame sub(const Frame& x, const Mask& keep) {
  Frame out;
  out.slots = x.slots;
  if (x.width() == 0) {
    out.rows = (x.rows && keep[0]) ? 1 : 0;
    return out;
  }
  for (std::size_t i = 0; i < x.rows; ++i) {
    if (!keep[i]) continue;
    out.cells.insert(out.cells.end(), x.row(i), x.row(i) + x.width());
    ++out.rows;
  }
  return out;
}

// Set of tuples over a domain of size n, encoded as base-n numbers.
class TupleSet {
 public:
  void reset(std::size_t arity, std::size_t n) {
    arity_ = arity;
    n_ = n;
    std::size_t cells = 1;
    dense_ = true;
    for (std::size_t i = 0; i < arity; ++i) {
      if (cells > (std::size_t{1} << 20) / std::max<std::size_t>(n, 1)) {
        dense_ = false;
        break;
      }
      cells *= n;
    }
    codes_.clear();
    if (dense_) {
      if (bits_.size() != cells) {
        bits_.assign(cells, 0);
      } else {
        std::fill(bits_.begin(), bits_.end(), 0);
      }
    }
  }
  std::uint64_t encode(const Element* t) const {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < arity_; ++i) c = c * n_ + t[i];
    return c;
  }
  void insert(const Element* t) {
    const std::uint64_t c = encode(t);
    if (dense_) {
      bits_[c] = 1;
    } else {
      codes_.push_back(c);
    }
  }
  void seal() {
    if (!dense_) {
      std::sort(codes_.begin(), codes_.end());
      codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
    }
  }
  bool contains(const Element* t) const {
    const std::uint64_t c = encode(t);
    if (dense_) return bits_[c] != 0;
    return std::binary_search(codes_.begin(), codes_.end(), c);
  }
  std::size_t arity() const { return arity_; }

 private:
  std::size_t arity_ = 0;
  std::size_t n_ = 0;
  bool dense_ = true;
  std::vector<char> bits_;
  std::vector<std::uint64_t> codes_;
};

struct CTerm {
  int slot = -1;  // -1: constant
  Element value = 0;
};

struct FoNode {
  enum Op : std::uint8_t { kTrue, kEq, kRel, kAnd, kOr, kExists, kForall };
  Op op = kTrue;
  bool negated = false;
  bool overlay = false;
  const Relation* rel = nullptr;
  std::vector<CTerm> terms;
  int a = -1;
  int b = -1;
  int slot = -1;
};

struct TsNode {
  FormulaKind kind = FormulaKind::kLiteral;
  int fo = -1;  // literal, or hook antecedent
  int a = -1;   // first child / body / hook consequent
  int b = -1;
  int slot = -1;
  std::vector<CTerm> terms;
  int sentence = -1;
  std::size_t arity = 0;
  DependencyKind dep_kind = DependencyKind::kUserDefined;
  DependencyPtr dep;
  bool dc = false, uc = false, upc = false, etp = false;
  bool const_guard = false;
  // With const_guard: the body with the guarded const atoms replaced by top.
  int guard_body = -1;
  // exists x. exists y. body where the inner quantifier has const_guard:
  // the constant for y is chosen first.
  bool hoist = false;
  // exists v1 ... vk. block_body where each vi occurs only in equalities
  // between the vi: the canonical tuple of every realizable equality pattern.
  std::vector<int> block_slots;
  int block_body = -1;
  std::vector<std::vector<Element>> patterns;
  // Compiled Tarskian form of a first-order non-literal, else -1.
  int flat = -1;
};

// Every atom of f that mentions a variable of vars is an equality between
// two of them, and no quantifier rebinds one.
bool equality_only(const Formula& f, const std::set<std::string>& vars) {
  auto mentions = [&](const Terms& ts) {
    return std::any_of(ts.begin(), ts.end(), [&](const Term& t) {
      return t.is_variable() && vars.count(t.name);
    });
  };
  switch (f.kind()) {
    case FormulaKind::kLiteral:
      if (!mentions(f.terms())) return true;
      return f.literal_kind() == LiteralKind::kEquality &&
             std::all_of(f.terms().begin(), f.terms().end(),
                         [&](const Term& t) {
                           return t.is_variable() && vars.count(t.name);
                         });
    case FormulaKind::kDepAtom:
    case FormulaKind::kGenericDep:
      return !mentions(f.terms());
    case FormulaKind::kExists:
    case FormulaKind::kForall:
      return !vars.count(f.var()) && equality_only(f.body(), vars);
    case FormulaKind::kHook:
      return equality_only(f.antecedent(), vars) &&
             equality_only(f.consequent(), vars);
    default:
      for (std::size_t i = 0; i < f.num_children(); ++i) {
        if (!equality_only(f.child(i), vars)) return false;
      }
      return true;
  }
}

// Restricted growth strings of length k with at most n distinct values.
std::vector<std::vector<Element>> equality_patterns(std::size_t k,
                                                    std::size_t n) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> p;
  auto rec = [&](auto&& self, Element blocks) -> void {
    if (p.size() == k) {
      out.push_back(p);
      return;
    }
    for (Element b = 0; b <= blocks && b < n; ++b) {
      p.push_back(b);
      self(self, b == blocks ? blocks + 1 : blocks);
      p.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

constexpr std::size_t kMaxPatterns = 15;

// Largest number of constant choices tried by the constancy split.
constexpr std::uint64_t kMaxSplitChoices = 1u << 16;

// A first-order formula true on exactly the rows where f is, when f is built
// from literals, connectives, quantifiers and hooks.
std::optional<Formula> flat_form(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::kLiteral:
      return f;
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
    case FormulaKind::kExists:
    case FormulaKind::kForall: {
      Formula out = f;
      for (std::size_t i = 0; i < f.num_children(); ++i) {
        auto c = flat_form(f.child(i));
        if (!c) return std::nullopt;
        if (!c->same_node(f.child(i))) out = out.with_child(i, *c);
      }
      return out;
    }
    case FormulaKind::kHook: {
      auto c = flat_form(f.consequent());
      if (!c || !is_first_order(f.antecedent())) return std::nullopt;
      return Formula::disj(nnf_negate(f.antecedent()), *c);
    }
    default:
      return std::nullopt;
  }
}

class DepthGuard {
 public:
  DepthGuard(std::size_t& depth, std::size_t cap) : depth_(depth) {
    if (++depth_ > cap) {
      --depth_;
      throw BudgetExceeded("recursion depth cap exceeded");
    }
  }
  ~DepthGuard() { --depth_; }

 private:
  std::size_t& depth_;
};

}  // namespace

class Evaluator::Impl {
 public:
  Impl(const Model& m, const Formula& f, const Registry& registry,
       EvalOptions options)
      : m_(m), registry_(registry), opts_(options), n_(m.size()) {
    free_ = free_vars(f);
    root_ = compile(f);
    empty_cache_.assign(ts_.size(), -1);
    if (opts_.constancy_split && opts_.flat_first_order) compile_split(f);
  }

  bool run(const Team& team) {
    for (const auto& v : free_) {
      if (!team.has_var(v)) {
        throw EvalError("unbound variable '" + v + "'");
      }
    }
    Frame x;
    for (const auto& v : team.vars()) x.slots.push_back(intern(v));
    x.cells = team.cells();
    x.rows = team.size();
    env_.resize(slot_names_.size(), 0);
    branches_ = 0;
    depth_ = 0;
    deadline_set_ = opts_.budget.timeout.count() > 0;
    if (deadline_set_) {
      deadline_ = std::chrono::steady_clock::now() + opts_.budget.timeout;
    }
    check_size(x);
    const bool result = split_root_ >= 0 ? split(x) : sat(root_, x);
    stats_.branches += branches_;
    return result;
  }

  const EvalStats& stats() const { return stats_; }

 private:
  // ---------------------------------------------------------------- compile

  int intern(const std::string& name) {
    auto it = slot_of_.find(name);
    if (it != slot_of_.end()) return it->second;
    const int s = static_cast<int>(slot_names_.size());
    slot_of_.emplace(name, s);
    slot_names_.push_back(name);
    return s;
  }

  CTerm compile_term(const Term& t) {
    CTerm c;
    if (t.is_variable()) {
      c.slot = intern(t.name);
    } else {
      auto e = m_.constant(t.name);
      if (!e) throw EvalError("unresolvable constant '" + t.name + "'");
      c.value = *e;
    }
    return c;
  }

  int compile_fo(const Formula& f, const std::string* overlay,
                 std::size_t overlay_arity) {
    FoNode n;
    switch (f.kind()) {
      case FormulaKind::kLiteral:
        n.negated = f.negated();
        for (const auto& t : f.terms()) n.terms.push_back(compile_term(t));
        if (f.literal_kind() == LiteralKind::kTruth) {
          n.op = FoNode::kTrue;
        } else if (f.literal_kind() == LiteralKind::kEquality) {
          n.op = FoNode::kEq;
        } else {
          n.op = FoNode::kRel;
          if (overlay && *overlay == f.name()) {
            n.overlay = true;
            if (f.terms().size() != overlay_arity) {
              throw EvalError("arity mismatch for '" + f.name() + "'");
            }
          } else {
            n.rel = m_.relation(f.name());
            if (!n.rel) {
              throw EvalError("unknown relation '" + f.name() + "'");
            }
            if (n.rel->arity() != f.terms().size()) {
              throw EvalError("arity mismatch for '" + f.name() + "'");
            }
          }
        }
        break;
      case FormulaKind::kAnd:
      case FormulaKind::kOr:
        n.op = f.is(FormulaKind::kAnd) ? FoNode::kAnd : FoNode::kOr;
        n.a = compile_fo(f.lhs(), overlay, overlay_arity);
        n.b = compile_fo(f.rhs(), overlay, overlay_arity);
        break;
      case FormulaKind::kExists:
      case FormulaKind::kForall:
        n.op = f.is(FormulaKind::kExists) ? FoNode::kExists : FoNode::kForall;
        n.slot = intern(f.var());
        n.a = compile_fo(f.body(), overlay, overlay_arity);
        break;
      default:
        throw FormulaError("expected a first-order formula: " +
                           print_kind(f));
    }
    fo_.push_back(std::move(n));
    return static_cast<int>(fo_.size() - 1);
  }

  // Each occurrence of const(t) is evaluated on a single team, and every
  // connective is monotone, so the formula holds iff it holds for some
  // choice of constants c with each occurrence read as t = c.
  void compile_split(const Formula& f) {
    std::vector<int> params;
    bool other_atoms = false;
    std::function<Formula(const Formula&)> rewrite = [&](const Formula& g) {
      if (g.is_atom()) {
        if (!is_constancy(g)) {
          other_atoms = true;
          return g;
        }
        Formula out = Formula::truth();
        bool first = true;
        for (const auto& t : g.terms()) {
          const std::string p = "#" + std::to_string(params.size());
          params.push_back(intern(p));
          Formula eq = Formula::equality(t, Term::var(p));
          out = first ? eq : Formula::conj(out, eq);
          first = false;
        }
        return out;
      }
      Formula out = g;
      for (std::size_t i = 0; i < g.num_children(); ++i) {
        out = out.with_child(i, rewrite(g.child(i)));
      }
      return out;
    };
    const Formula g = rewrite(f);
    if (params.empty() || other_atoms) return;
    auto flat = flat_form(g);
    if (!flat) return;
    std::uint64_t choices = 1;
    for (std::size_t i = 0; i < params.size(); ++i) {
      choices *= n_;
      if (choices > kMaxSplitChoices) return;
    }
    split_params_ = std::move(params);
    split_root_ = compile_fo(*flat, nullptr, 0);
  }

  bool split(const Frame& x) {
    std::vector<Element> c(split_params_.size(), 0);
    while (true) {
      charge(1 + x.rows);
      for (std::size_t k = 0; k < c.size(); ++k) env_[split_params_[k]] = c[k];
      bool all = true;
      for (std::size_t i = 0; i < x.rows && all; ++i) {
        load_row(x, i);
        all = fo(split_root_);
      }
      if (all) return true;
      std::size_t k = 0;
      for (; k < c.size(); ++k) {
        if (++c[k] < n_) break;
        c[k] = 0;
      }
      if (k == c.size()) return false;
    }
  }

  void compile_block(const Formula& f, TsNode& n) {
    std::set<std::string> vars;
    const Formula* cur = &f;
    int body = n.a;
    std::vector<int> slots;
    while (true) {
      if (!vars.insert(cur->var()).second) return;
      slots.push_back(intern(cur->var()));
      if (!cur->body().is(FormulaKind::kExists)) break;
      cur = &cur->body();
      body = ts_[body].a;
    }
    if (!equality_only(cur->body(), vars)) return;
    auto patterns = equality_patterns(slots.size(), n_);
    if (patterns.empty() || patterns.size() > kMaxPatterns) return;
    n.block_slots = std::move(slots);
    n.block_body = body;
    n.patterns = std::move(patterns);
  }

  bool is_constancy(const Formula& c) const {
    if (!c.is(FormulaKind::kDepAtom)) return false;
    DependencyPtr d = registry_.lookup(c.name(), c.terms().size());
    return d && d->kind == DependencyKind::kConstancy;
  }

  // A const atom on a tuple containing v, reached through conjunctions,
  // universal quantifiers over other variables and top hooks. Each of these
  // keeps v constant exactly when it is constant on the team.
  bool has_guard(const Formula& f, const std::string& v) const {
    switch (f.kind()) {
      case FormulaKind::kAnd:
        return has_guard(f.lhs(), v) || has_guard(f.rhs(), v);
      case FormulaKind::kForall:
        return f.var() != v && has_guard(f.body(), v);
      case FormulaKind::kHook:
        return f.antecedent().is_top() && has_guard(f.consequent(), v);
      default:
        break;
    }
    if (!is_constancy(f)) return false;
    for (const auto& t : f.terms()) {
      if (t.is_variable() && t.name == v) return true;
    }
    return false;
  }

  // Guard atoms const(t) with every term v or a constant hold on any team
  // where v is constant.
  Formula strip_constancy(const Formula& f, const std::string& v) const {
    if (f.is(FormulaKind::kAnd)) {
      return Formula::conj(strip_constancy(f.lhs(), v),
                           strip_constancy(f.rhs(), v));
    }
    if (f.is(FormulaKind::kForall) && f.var() != v) {
      return Formula::forall(f.var(), strip_constancy(f.body(), v));
    }
    if (f.is(FormulaKind::kHook) && f.antecedent().is_top()) {
      return Formula::hook(f.antecedent(), strip_constancy(f.consequent(), v));
    }
    if (!is_constancy(f)) return f;
    for (const auto& t : f.terms()) {
      if (t.is_variable() && t.name != v) return f;
    }
    return Formula::truth();
  }

  static std::string print_kind(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::kHook: return "hook";
      case FormulaKind::kDiamond: return "diamond";
      case FormulaKind::kDepAtom: return "dependency atom " + f.name();
      case FormulaKind::kGenericDep: return "generic dependency";
      default: return "formula";
    }
  }

  int compile(const Formula& f) {
    TsNode n;
    n.kind = f.kind();
    switch (f.kind()) {
      case FormulaKind::kLiteral:
        n.fo = compile_fo(f, nullptr, 0);
        n.dc = n.uc = n.etp = true;
        n.upc = f.is_top();
        break;
      case FormulaKind::kAnd:
      case FormulaKind::kOr: {
        n.a = compile(f.lhs());
        n.b = compile(f.rhs());
        const TsNode& l = ts_[n.a];
        const TsNode& r = ts_[n.b];
        n.dc = l.dc && r.dc;
        n.uc = l.uc && r.uc;
        n.upc = l.upc && r.upc;
        n.etp = l.etp && r.etp;
        break;
      }
      case FormulaKind::kExists:
      case FormulaKind::kForall: {
        n.slot = intern(f.var());
        n.a = compile(f.body());
        const TsNode& body = ts_[n.a];
        n.dc = body.dc;
        n.uc = body.uc;
        n.upc = body.upc;
        n.etp = body.etp;
        if (f.is(FormulaKind::kExists)) {
          n.const_guard = has_guard(f.body(), f.var());
          if (n.const_guard) {
            n.guard_body = compile(strip_constancy(f.body(), f.var()));
          }
          const Formula& inner = f.body();
          if (inner.is(FormulaKind::kExists) && inner.var() != f.var() &&
              ts_[n.a].const_guard) {
            n.hoist = true;
          }
          compile_block(f, n);
        }
        break;
      }
      case FormulaKind::kHook: {
        n.fo = compile_fo(f.antecedent(), nullptr, 0);
        n.a = compile(f.consequent());
        const TsNode& c = ts_[n.a];
        n.dc = c.dc;
        n.uc = c.uc;
        n.upc = c.upc;
        n.etp = c.etp;
        break;
      }
      case FormulaKind::kDiamond:
        n.a = compile(f.body());
        n.uc = n.upc = true;
        break;
      case FormulaKind::kDepAtom: {
        n.dep = registry_.lookup(f.name(), f.terms().size());
        if (!n.dep) {
          throw EvalError("unknown dependency '" + f.name() + "' of arity " +
                          std::to_string(f.terms().size()));
        }
        n.arity = n.dep->arity;
        n.dep_kind = n.dep->kind;
        for (const auto& t : f.terms()) n.terms.push_back(compile_term(t));
        n.sentence = compile_fo(n.dep->sentence, &n.dep->relation_symbol,
                                n.arity);
        n.dc = n.dep->flags.dc();
        n.uc = n.dep->flags.uc();
        n.upc = n.dep->flags.upc();
        n.etp = n.dep->flags.etp();
        break;
      }
      case FormulaKind::kGenericDep:
        n.arity = f.terms().size();
        for (const auto& t : f.terms()) n.terms.push_back(compile_term(t));
        if (!is_sentence(f.sentence())) {
          throw EvalError("generic dependency sentence has free variables");
        }
        n.sentence = compile_fo(f.sentence(), &f.name(), n.arity);
        break;
    }
    if (f.kind() != FormulaKind::kLiteral) {
      if (auto flat = flat_form(f)) n.flat = compile_fo(*flat, nullptr, 0);
    }
    ts_.push_back(std::move(n));
    return static_cast<int>(ts_.size() - 1);
  }

  // ------------------------------------------------------------ tarski

  Element value(const CTerm& t) const {
    return t.slot >= 0 ? env_[t.slot] : t.value;
  }

  bool fo(int id) {
    const FoNode& f = fo_[id];
    switch (f.op) {
      case FoNode::kTrue:
        return !f.negated;
      case FoNode::kEq:
        return (value(f.terms[0]) == value(f.terms[1])) != f.negated;
      case FoNode::kRel: {
        Element buf[16];
        std::vector<Element> big;
        Element* t = buf;
        if (f.terms.size() > 16) {
          big.resize(f.terms.size());
          t = big.data();
        }
        for (std::size_t i = 0; i < f.terms.size(); ++i) {
          t[i] = value(f.terms[i]);
        }
        const bool v =
            f.overlay ? overlay_->contains(t)
                      : f.rel->contains(std::span<const Element>(
                            t, f.terms.size()));
        return v != f.negated;
      }
      case FoNode::kAnd:
        return fo(f.a) && fo(f.b);
      case FoNode::kOr:
        return fo(f.a) || fo(f.b);
      case FoNode::kExists:
      case FoNode::kForall: {
        const bool universal = f.op == FoNode::kForall;
        const Element saved = env_[f.slot];
        bool result = universal;
        for (std::size_t e = 0; e < n_; ++e) {
          env_[f.slot] = static_cast<Element>(e);
          if (fo(f.a) != universal) {
            result = !universal;
            break;
          }
        }
        env_[f.slot] = saved;
        return result;
      }
    }
    return false;
  }

  void load_row(const Frame& x, std::size_t i) {
    const Element* r = x.row(i);
    for (std::size_t c = 0; c < x.width(); ++c) env_[x.slots[c]] = r[c];
  }

  // ------------------------------------------------------------ budget

  void charge(std::uint64_t k = 1) {
    branches_ += k;
    if (branches_ > opts_.budget.max_branches) {
      throw BudgetExceeded("enumeration budget exceeded (" +
                           std::to_string(opts_.budget.max_branches) +
                           " branches)");
    }
    if (deadline_set_ && (branches_ & 1023) == 0 &&
        std::chrono::steady_clock::now() > deadline_) {
      throw BudgetExceeded("evaluation timed out");
    }
  }

  void check_size(const Frame& x) const {
    if (x.rows > opts_.budget.max_team_rows) {
      throw BudgetExceeded("team of " + std::to_string(x.rows) +
                           " assignments exceeds the cap of " +
                           std::to_string(opts_.budget.max_team_rows));
    }
  }

  // ------------------------------------------------------------ frames

  // x[values/v]; values(i) lists the elements for row i.
  template <typename Values>
  Frame extend(const Frame& x, int slot, const Values& values) {
    Frame out;
    out.slots = x.slots;
    int c = x.col(slot);
    if (c < 0) {
      out.slots.push_back(slot);
      c = static_cast<int>(x.width());
    }
    const std::size_t w = out.width();
    std::vector<Element> r(w);
    std::size_t total = 0;
    for (std::size_t i = 0; i < x.rows; ++i) {
      std::copy(x.row(i), x.row(i) + x.width(), r.begin());
      for (Element e : values(i)) {
        r[c] = e;
        out.cells.insert(out.cells.end(), r.begin(), r.end());
        ++total;
      }
    }
    out.rows = total;
    if (total > opts_.budget.max_team_rows) check_size(out);
    out.normalize();
    return out;
  }

  Frame extend_all(const Frame& x, int slot) {
    return extend(x, slot, [&](std::size_t) { return all_elements(); });
  }

  const std::vector<Element>& all_elements() {
    if (all_.size() != n_) {
      all_.resize(n_);
      std::iota(all_.begin(), all_.end(), Element{0});
    }
    return all_;
  }

  Frame restrict_frame(const Frame& x, int fo_id, Mask* kept) {
    Mask keep(x.rows);
    for (std::size_t i = 0; i < x.rows; ++i) {
      load_row(x, i);
      keep[i] = fo(fo_id);
    }
    Frame out = sub(x, keep);
    if (kept) *kept = std::move(keep);
    return out;
  }

  // ------------------------------------------------------------ satisfaction

  bool empty_sat(int id) {
    if (empty_cache_[id] < 0) {
      Frame empty;
      empty_cache_[id] = sat_generic(id, empty) ? 1 : 0;
    }
    return empty_cache_[id] == 1;
  }

  bool sat(int id, const Frame& x) {
    DepthGuard guard(depth_, opts_.budget.max_depth);
    ++stats_.nodes;
    if (x.rows == 0) return empty_sat(id);
    const TsNode& n = ts_[id];
    if (n.kind == FormulaKind::kLiteral) return sat_generic(id, x);
    if (opts_.flat_first_order && n.flat >= 0) return all_of(flat_rows(n, x));
    std::string key;
    if (opts_.memoize) {
      key = memo_key(id, x);
      auto it = memo_.find(key);
      if (it != memo_.end()) {
        ++stats_.memo_hits;
        return it->second;
      }
    }
    bool result;
    if (opts_.union_closed_strategy && n.uc) {
      result = all_of(max_sat(id, x));
    } else {
      result = sat_generic(id, x);
    }
    if (opts_.memoize) {
      if (memo_.size() >= opts_.memo_capacity) memo_.clear();
      memo_.emplace(std::move(key), result);
    }
    return result;
  }

  Mask flat_rows(const TsNode& n, const Frame& x) {
    Mask out(x.rows);
    charge();
    for (std::size_t i = 0; i < x.rows; ++i) {
      load_row(x, i);
      out[i] = fo(n.flat);
    }
    return out;
  }

  std::string memo_key(int id, const Frame& x) const {
    std::string key(sizeof(int) * (2 + x.slots.size()) +
                        sizeof(Element) * x.cells.size(),
                    '\0');
    char* p = key.data();
    const int w = static_cast<int>(x.width());
    std::memcpy(p, &id, sizeof(int));
    p += sizeof(int);
    std::memcpy(p, &w, sizeof(int));
    p += sizeof(int);
    std::memcpy(p, x.slots.data(), sizeof(int) * x.slots.size());
    p += sizeof(int) * x.slots.size();
    std::memcpy(p, x.cells.data(), sizeof(Element) * x.cells.size());
    return key;
  }

  bool sat_generic(int id, const Frame& x) {
    const TsNode& n = ts_[id];
    switch (n.kind) {
      case FormulaKind::kLiteral:
        for (std::size_t i = 0; i < x.rows; ++i) {
          load_row(x, i);
          if (!fo(n.fo)) return false;
        }
        return true;
      case FormulaKind::kAnd:
        return sat(n.a, x) && sat(n.b, x);
      case FormulaKind::kOr:
        return or_generic(n, x);
      case FormulaKind::kExists:
        return exists_generic(n, x);
      case FormulaKind::kForall:
        return sat(n.a, extend_all(x, n.slot));
      case FormulaKind::kHook:
        return sat(n.a, restrict_frame(x, n.fo, nullptr));
      case FormulaKind::kDiamond:
        return x.rows > 0 && some_subteam(n.a, x, true);
      case FormulaKind::kDepAtom:
      case FormulaKind::kGenericDep:
        return dep_holds(n, x);
    }
    return false;
  }

  bool dep_holds(const TsNode& n, const Frame& x) {
    charge();
    std::vector<int> cols;
    for (const auto& t : n.terms) cols.push_back(t.slot >= 0 ? x.col(t.slot) : -1);
    TupleSet rel;
    rel.reset(n.arity, n_);
    std::vector<Element> t(n.arity);
    for (std::size_t i = 0; i < x.rows; ++i) {
      const Element* r = x.row(i);
      for (std::size_t k = 0; k < n.arity; ++k) {
        t[k] = cols[k] >= 0 ? r[cols[k]] : n.terms[k].value;
      }
      rel.insert(t.data());
    }
    rel.seal();
    const TupleSet* saved = overlay_;
    overlay_ = &rel;
    const bool v = fo(n.sentence);
    overlay_ = saved;
    return v;
  }

  // Some Z within x (nonempty when required) satisfies node id.
  bool some_subteam(int id, const Frame& x, bool nonempty) {
    if (!nonempty && empty_sat(id)) return true;
    if (x.rows == 0) return false;
    const TsNode& n = ts_[id];
    if (opts_.upward_pruning && n.upc) return sat(id, x);
    if (opts_.downward_pruning && n.dc) {
      Mask one(x.rows, false);
      for (std::size_t i = 0; i < x.rows; ++i) {
        charge();
        one[i] = true;
        if (sat(id, sub(x, one))) return true;
        one[i] = false;
      }
      return false;
    }
    if (opts_.union_closed_strategy && n.uc) return any_of(max_sat(id, x));
    return subset_search(x, [&](const Mask& m) {
      return any_of(m) && sat(id, sub(x, m));
    });
  }

  // Calls pred on every subset of x's rows, largest first by bit pattern,
  // until it returns true.
  template <typename Pred>
  bool subset_search(const Frame& x, const Pred& pred) {
    if (x.rows > 30) throw BudgetExceeded("too many subteams to enumerate");
    const std::uint64_t full = (std::uint64_t{1} << x.rows) - 1;
    Mask m(x.rows);
    for (std::uint64_t s = full + 1; s-- > 0;) {
      charge();
      for (std::size_t i = 0; i < x.rows; ++i) m[i] = (s >> i) & 1;
      if (pred(m)) return true;
    }
    return false;
  }

  // Some Z with required within Z within x satisfies node id.
  bool superset_sat(int id, const Frame& x, const Mask& required) {
    if (all_of(required)) return sat(id, x);
    const TsNode& n = ts_[id];
    if (opts_.downward_pruning && n.dc) return sat(id, sub(x, required));
    if (opts_.upward_pruning && n.upc) return sat(id, x);
    if (opts_.union_closed_strategy && n.uc) {
      const Mask best = max_sat(id, x);
      if (!any_of(required)) return empty_sat(id) || any_of(best);
      for (std::size_t i = 0; i < x.rows; ++i) {
        if (required[i] && !best[i]) return false;
      }
      return true;
    }
    std::vector<std::size_t> free_rows;
    for (std::size_t i = 0; i < x.rows; ++i) {
      if (!required[i]) free_rows.push_back(i);
    }
    if (free_rows.size() > 30) {
      throw BudgetExceeded("too many subteams to enumerate");
    }
    Mask m = required;
    for (std::uint64_t s = std::uint64_t{1} << free_rows.size(); s-- > 0;) {
      charge();
      for (std::size_t k = 0; k < free_rows.size(); ++k) {
        m[free_rows[k]] = (s >> k) & 1;
      }
      if (sat(id, sub(x, m))) return true;
    }
    return false;
  }

  bool or_generic(const TsNode& n, const Frame& x) {
    const TsNode& l = ts_[n.a];
    const TsNode& r = ts_[n.b];
    if (opts_.upward_pruning && l.upc) {
      return sat(n.a, x) && some_subteam(n.b, x, false);
    }
    if (opts_.upward_pruning && r.upc) {
      return sat(n.b, x) && some_subteam(n.a, x, false);
    }
    if (opts_.union_closed_strategy && (l.uc || r.uc)) {
      const int u = l.uc ? n.a : n.b;
      const int other = l.uc ? n.b : n.a;
      const Mask best = max_sat(u, x);
      if (any_of(best)) {
        Mask rest(x.rows);
        for (std::size_t i = 0; i < x.rows; ++i) rest[i] = !best[i];
        if (superset_sat(other, x, rest)) return true;
      }
      if (empty_sat(u) && sat(other, x)) return true;
      return false;
    }
    if (opts_.downward_pruning && l.dc && r.dc) {
      Mask left(x.rows, false), right(x.rows, false);
      return partition(n, x, 0, left, right);
    }
    return covers(n, x);
  }

  bool partition(const TsNode& n, const Frame& x, std::size_t i, Mask& left,
                 Mask& right) {
    if (i == x.rows) {
      return (any_of(left) || empty_sat(n.a)) &&
             (any_of(right) || empty_sat(n.b));
    }
    charge();
    left[i] = true;
    if (sat(n.a, sub(x, left)) && partition(n, x, i + 1, left, right)) {
      return true;
    }
    left[i] = false;
    right[i] = true;
    if (sat(n.b, sub(x, right)) && partition(n, x, i + 1, left, right)) {
      return true;
    }
    right[i] = false;
    return false;
  }

  // Every cover (Y, Z) of x: tabulate both sides over all subsets, then
  // match each satisfying Y against some satisfying superset of x \ Y.
  bool covers(const TsNode& n, const Frame& x) {
    if (x.rows > 24) throw BudgetExceeded("too many covers to enumerate");
    const std::size_t num = std::size_t{1} << x.rows;
    charge(2 * num);
    std::vector<char> left(num), right(num);
    Mask m(x.rows);
    auto mask_of = [&](std::size_t s) {
      for (std::size_t i = 0; i < x.rows; ++i) m[i] = (s >> i) & 1;
      return sub(x, m);
    };
    for (std::size_t s = 0; s < num; ++s) {
      left[s] = sat(n.a, mask_of(s));
      right[s] = sat(n.b, mask_of(s));
    }
    // right[s] becomes: some superset of s satisfies the right disjunct.
    for (std::size_t bit = 1; bit < num; bit <<= 1) {
      for (std::size_t s = 0; s < num; ++s) {
        if (!(s & bit)) right[s] = right[s] || right[s | bit];
      }
    }
    for (std::size_t s = 0; s < num; ++s) {
      if (left[s] && right[(num - 1) & ~s]) return true;
    }
    return false;
  }

  Frame with_constant(const Frame& x, int slot, Element e) {
    return extend(x, slot, [&](std::size_t) { return std::array{e}; });
  }

  bool exists_generic(const TsNode& n, const Frame& x) {
    if (opts_.equality_blocks && !n.block_slots.empty()) {
      return exists_block(n, x);
    }
    const TsNode& body = ts_[n.a];
    if (opts_.upward_pruning && body.upc) {
      return sat(n.a, extend_all(x, n.slot));
    }
    if (opts_.constancy_guard && n.const_guard) {
      for (std::size_t e = 0; e < n_; ++e) {
        charge();
        if (sat(n.guard_body,
                with_constant(x, n.slot, static_cast<Element>(e)))) {
          return true;
        }
      }
      return false;
    }
    if (opts_.constancy_guard && n.hoist) {
      for (std::size_t e = 0; e < n_; ++e) {
        charge();
        const Frame y = with_constant(x, body.slot, static_cast<Element>(e));
        if (exists_on(n.slot, body.guard_body, y)) return true;
      }
      return false;
    }
    return choose(n.slot, n.a, x);
  }

  // x extended by the block variables; row i takes the patterns in chosen(i).
  template <typename Chosen>
  Frame extend_block(const TsNode& n, const Frame& x, const Chosen& chosen) {
    Frame out;
    out.slots = x.slots;
    std::vector<int> cols;
    for (int s : n.block_slots) {
      int c = out.col(s);
      if (c < 0) {
        out.slots.push_back(s);
        c = static_cast<int>(out.width() - 1);
      }
      cols.push_back(c);
    }
    std::vector<Element> r(out.width());
    for (std::size_t i = 0; i < x.rows; ++i) {
      std::copy(x.row(i), x.row(i) + x.width(), r.begin());
      for (std::size_t p : chosen(i)) {
        for (std::size_t k = 0; k < cols.size(); ++k) {
          r[cols[k]] = n.patterns[p][k];
        }
        out.cells.insert(out.cells.end(), r.begin(), r.end());
        ++out.rows;
      }
    }
    if (out.rows > opts_.budget.max_team_rows) check_size(out);
    out.normalize();
    return out;
  }

  // The body's truth on a team depends on the block columns only through
  // their equality pattern, so any lax choice of values may be replaced by
  // the canonical tuples of the patterns it realizes.
  bool exists_block(const TsNode& n, const Frame& x) {
    const int body = n.block_body;
    if (x.rows == 0) return empty_sat(body);
    const TsNode& b = ts_[body];
    const std::size_t np = n.patterns.size();
    std::vector<std::size_t> all(np);
    std::iota(all.begin(), all.end(), std::size_t{0});
    if (opts_.downward_pruning && b.dc) {
      std::vector<std::size_t> choice(x.rows, 0);
      return block_strict(n, x, 0, choice);
    }
    if (opts_.union_closed_strategy && b.uc) {
      const Frame d = extend_block(n, x, [&](std::size_t) { return all; });
      const Mask w = max_sat(body, d);
      if (!any_of(w)) return false;
      std::vector<int> cols;
      for (int s : n.block_slots) cols.push_back(d.col(s));
      std::vector<Element> key(d.width());
      for (std::size_t i = 0; i < x.rows; ++i) {
        std::copy(x.row(i), x.row(i) + x.width(), key.begin());
        bool kept = false;
        for (std::size_t p = 0; p < np && !kept; ++p) {
          for (std::size_t k = 0; k < cols.size(); ++k) {
            key[cols[k]] = n.patterns[p][k];
          }
          const long j = d.find(key.data());
          kept = j >= 0 && w[j];
        }
        if (!kept) return false;
      }
      return true;
    }
    if (opts_.upward_pruning && b.upc) {
      return sat(body, extend_block(n, x, [&](std::size_t) { return all; }));
    }
    const std::uint32_t full = (std::uint32_t{1} << np) - 1;
    std::vector<std::uint32_t> masks(x.rows, full);
    std::vector<std::vector<std::size_t>> sets(x.rows, all);
    auto members = [&](std::uint32_t mask) {
      std::vector<std::size_t> out;
      for (std::size_t p = 0; p < np; ++p) {
        if (mask >> p & 1) out.push_back(p);
      }
      return out;
    };
    while (true) {
      charge();
      if (sat(body, extend_block(n, x, [&](std::size_t i)
                                           -> const std::vector<std::size_t>& {
            return sets[i];
          }))) {
        return true;
      }
      std::size_t i = 0;
      for (; i < x.rows; ++i) {
        if (masks[i] > 1) {
          sets[i] = members(--masks[i]);
          break;
        }
        masks[i] = full;
        sets[i] = all;
      }
      if (i == x.rows) return false;
    }
  }

  bool block_strict(const TsNode& n, const Frame& x, std::size_t i,
                    std::vector<std::size_t>& choice) {
    if (i == x.rows) return true;
    Mask prefix(x.rows, false);
    for (std::size_t j = 0; j <= i; ++j) prefix[j] = true;
    const Frame head = sub(x, prefix);
    for (std::size_t p = 0; p < n.patterns.size(); ++p) {
      charge();
      choice[i] = p;
      const Frame y = extend_block(n, head, [&](std::size_t j) {
        return std::array{choice[j]};
      });
      if (sat(n.block_body, y) && block_strict(n, x, i + 1, choice)) {
        return true;
      }
    }
    return false;
  }

  // X |= exists slot. body, for a body that is not a compiled quantifier.
  bool exists_on(int slot, int body, const Frame& x) {
    if (x.rows == 0) return empty_sat(body);
    const TsNode& b = ts_[body];
    if (opts_.union_closed_strategy && b.uc) {
      return all_of(max_exists(slot, body, x));
    }
    if (opts_.upward_pruning && b.upc) {
      return sat(body, extend_all(x, slot));
    }
    return choose(slot, body, x);
  }

  bool choose(int slot, int body, const Frame& x) {
    if (opts_.downward_pruning && ts_[body].dc) {
      std::vector<Element> choice(x.rows, 0);
      return strict_choice(slot, body, x, 0, choice);
    }
    return lax_choice(slot, body, x);
  }

  bool strict_choice(int slot, int body, const Frame& x, std::size_t i,
                     std::vector<Element>& choice) {
    if (i == x.rows) return true;
    Mask prefix(x.rows, false);
    for (std::size_t j = 0; j <= i; ++j) prefix[j] = true;
    const Frame head = sub(x, prefix);
    for (std::size_t e = 0; e < n_; ++e) {
      charge();
      choice[i] = static_cast<Element>(e);
      const Frame y = extend(head, slot, [&](std::size_t j) {
        return std::array{choice[j]};
      });
      if (sat(body, y) && strict_choice(slot, body, x, i + 1, choice)) {
        return true;
      }
    }
    return false;
  }

  bool lax_choice(int slot, int body, const Frame& x) {
    if (n_ > 30) throw BudgetExceeded("domain too large for lax choices");
    const std::uint32_t full = (std::uint32_t{1} << n_) - 1;
    std::vector<std::uint32_t> masks(x.rows, full);
    std::vector<std::vector<Element>> sets(x.rows);
    auto elements = [&](std::uint32_t mask) {
      std::vector<Element> out;
      for (std::size_t e = 0; e < n_; ++e) {
        if (mask >> e & 1) out.push_back(static_cast<Element>(e));
      }
      return out;
    };
    for (std::size_t i = 0; i < x.rows; ++i) sets[i] = elements(full);
    while (true) {
      charge();
      const Frame y =
          extend(x, slot, [&](std::size_t i) -> const std::vector<Element>& {
            return sets[i];
          });
      if (sat(body, y)) return true;
      // Odometer, counting down from the full choice.
      std::size_t i = 0;
      for (; i < x.rows; ++i) {
        if (masks[i] > 1) {
          --masks[i];
          sets[i] = elements(masks[i]);
          break;
        }
        masks[i] = full;
        sets[i] = elements(full);
      }
      if (i == x.rows) return false;
    }
  }

  // ------------------------------------------------------------ MaxSat

  Mask max_sat(int id, const Frame& x) {
    DepthGuard guard(depth_, opts_.budget.max_depth);
    if (x.rows == 0) return {};
    const TsNode& n = ts_[id];
    if (opts_.flat_first_order && n.flat >= 0) return flat_rows(n, x);
    switch (n.kind) {
      case FormulaKind::kLiteral: {
        Mask m(x.rows);
        for (std::size_t i = 0; i < x.rows; ++i) {
          load_row(x, i);
          m[i] = fo(n.fo);
        }
        return m;
      }
      case FormulaKind::kAnd:
        return max_and(n, x);
      case FormulaKind::kOr: {
        Mask a = max_sat(n.a, x);
        Mask b = max_sat(n.b, x);
        const bool na = any_of(a), nb = any_of(b);
        if (na && nb) {
          for (std::size_t i = 0; i < x.rows; ++i) a[i] = a[i] || b[i];
          return a;
        }
        if (na) return empty_sat(n.b) ? a : Mask(x.rows, false);
        if (nb) return empty_sat(n.a) ? b : Mask(x.rows, false);
        return Mask(x.rows, false);
      }
      case FormulaKind::kExists:
        return max_exists(n.slot, n.a, x);
      case FormulaKind::kForall:
        return max_forall(n, x);
      case FormulaKind::kHook: {
        Mask theta;
        const Frame r = restrict_frame(x, n.fo, &theta);
        const Mask inner = max_sat(n.a, r);
        const bool nonempty = any_of(inner);
        if (!nonempty && !empty_sat(n.a)) return Mask(x.rows, false);
        Mask out(x.rows);
        std::size_t j = 0;
        for (std::size_t i = 0; i < x.rows; ++i) {
          if (theta[i]) {
            out[i] = nonempty && inner[j];
            ++j;
          } else {
            out[i] = true;
          }
        }
        return out;
      }
      case FormulaKind::kDiamond:
        return Mask(x.rows, sat_generic(id, x));
      case FormulaKind::kDepAtom:
      case FormulaKind::kGenericDep:
        return max_dep(n, x);
    }
    return Mask(x.rows, false);
  }

  Mask max_and(const TsNode& n, const Frame& x) {
    std::vector<std::size_t> idx(x.rows);
    std::iota(idx.begin(), idx.end(), 0);
    Frame y = x;
    auto shrink = [&](const Mask& keep) {
      std::vector<std::size_t> next;
      for (std::size_t j = 0; j < idx.size(); ++j) {
        if (keep[j]) next.push_back(idx[j]);
      }
      idx = std::move(next);
      y = sub(y, keep);
    };
    while (y.rows > 0) {
      bool changed = false;
      const Mask a = max_sat(n.a, y);
      if (!all_of(a)) {
        shrink(a);
        changed = true;
      }
      if (y.rows == 0) break;
      const Mask b = max_sat(n.b, y);
      if (!all_of(b)) {
        shrink(b);
        changed = true;
      }
      if (!changed) break;
    }
    Mask out(x.rows, false);
    for (std::size_t i : idx) out[i] = true;
    return out;
  }

  Mask max_exists(int slot, int body, const Frame& x) {
    const Frame d = extend_all(x, slot);
    const Mask w = max_sat(body, d);
    Mask out(x.rows, false);
    if (!any_of(w)) return out;
    const int c = d.col(slot);
    std::vector<Element> key(d.width());
    for (std::size_t i = 0; i < x.rows; ++i) {
      std::copy(x.row(i), x.row(i) + x.width(), key.begin());
      for (std::size_t e = 0; e < n_ && !out[i]; ++e) {
        key[c] = static_cast<Element>(e);
        const long j = d.find(key.data());
        out[i] = j >= 0 && w[j];
      }
    }
    return out;
  }

  Mask max_forall(const TsNode& n, const Frame& x) {
    std::vector<std::size_t> idx(x.rows);
    std::iota(idx.begin(), idx.end(), 0);
    Frame y = x;
    while (y.rows > 0) {
      const Frame d = extend_all(y, n.slot);
      const Mask w = max_sat(n.a, d);
      const int c = d.col(n.slot);
      std::vector<Element> key(d.width());
      Mask keep(y.rows, true);
      bool changed = false;
      for (std::size_t i = 0; i < y.rows; ++i) {
        std::copy(y.row(i), y.row(i) + y.width(), key.begin());
        for (std::size_t e = 0; e < n_; ++e) {
          key[c] = static_cast<Element>(e);
          const long j = d.find(key.data());
          if (j < 0 || !w[j]) {
            keep[i] = false;
            changed = true;
            break;
          }
        }
      }
      if (!changed) break;
      std::vector<std::size_t> next;
      for (std::size_t j = 0; j < idx.size(); ++j) {
        if (keep[j]) next.push_back(idx[j]);
      }
      idx = std::move(next);
      y = sub(y, keep);
    }
    Mask out(x.rows, false);
    for (std::size_t i : idx) out[i] = true;
    return out;
  }

  Mask max_dep(const TsNode& n, const Frame& x) {
    if (n.upc) return Mask(x.rows, dep_holds(n, x));
    if (n.dep_kind == DependencyKind::kInclusion && n.arity % 2 == 0) {
      return max_inclusion(n, x);
    }
    // Generic union-closed atom: union of all satisfying subteams.
    Mask out(x.rows, false);
    subset_search(x, [&](const Mask& m) {
      if (!any_of(m)) return false;
      if (dep_holds(n, sub(x, m))) {
        for (std::size_t i = 0; i < x.rows; ++i) out[i] = out[i] || m[i];
      }
      return false;
    });
    return out;
  }

  // Greatest subteam whose left tuples all occur among its right tuples.
  Mask max_inclusion(const TsNode& n, const Frame& x) {
    charge();
    const std::size_t k = n.arity / 2;
    std::vector<Element> left(x.rows * k), right(x.rows * k);
    for (std::size_t i = 0; i < x.rows; ++i) {
      const Element* r = x.row(i);
      for (std::size_t j = 0; j < n.arity; ++j) {
        const CTerm& t = n.terms[j];
        const Element v = t.slot >= 0 ? r[x.col(t.slot)] : t.value;
        (j < k ? left[i * k + j] : right[i * k + j - k]) = v;
      }
    }
    Mask keep(x.rows, true);
    TupleSet values;
    while (true) {
      values.reset(k, n_);
      for (std::size_t i = 0; i < x.rows; ++i) {
        if (keep[i]) values.insert(&right[i * k]);
      }
      values.seal();
      bool changed = false;
      for (std::size_t i = 0; i < x.rows; ++i) {
        if (keep[i] && !values.contains(&left[i * k])) {
          keep[i] = false;
          changed = true;
        }
      }
      if (!changed) break;
    }
    return keep;
  }

  const Model& m_;
  const Registry& registry_;
  EvalOptions opts_;
  std::size_t n_;
  std::set<std::string> free_;
  std::vector<FoNode> fo_;
  std::vector<TsNode> ts_;
  int root_ = -1;
  std::unordered_map<std::string, int> slot_of_;
  std::vector<std::string> slot_names_;
  std::vector<Element> env_;
  std::vector<Element> all_;
  const TupleSet* overlay_ = nullptr;
  std::vector<int> empty_cache_;
  std::unordered_map<std::string, bool> memo_;
  std::uint64_t branches_ = 0;
  std::size_t depth_ = 0;
  bool deadline_set_ = false;
  int split_root_ = -1;
  std::vector<int> split_params_;
  std::chrono::steady_clock::time_point deadline_;
  EvalStats stats_;
};

Evaluator::Evaluator(const Model& m, const Formula& f,
                     const Registry& registry, EvalOptions options)
    : impl_(std::make_unique<Impl>(m, f, registry, options)) {}
Evaluator::~Evaluator() = default;
Evaluator::Evaluator(Evaluator&&) noexcept = default;
Evaluator& Evaluator::operator=(Evaluator&&) noexcept = default;

bool Evaluator::operator()(const Team& x) { return impl_->run(x); }
const EvalStats& Evaluator::stats() const { return impl_->stats(); }

EvalOptions plain_options() {
  EvalOptions o;
  o.union_closed_strategy = false;
  o.downward_pruning = false;
  o.upward_pruning = false;
  o.constancy_guard = false;
  o.equality_blocks = false;
  o.flat_first_order = false;
  o.constancy_split = false;
  return o;
}

bool eval(const Model& m, const Team& x, const Formula& f,
          const Registry& registry, const EvalOptions& options) {
  Evaluator ev(m, f, registry, options);
  return ev(x);
}

}  // namespace teamsem
