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

#include "teamsem/team.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "teamsem/errors.h"

namespace teamsem {

namespace {

void check_distinct(const std::vector<std::string>& vars) {
  std::set<std::string_view> seen;
  for (const auto& v : vars) {
    if (!seen.insert(v).second) {
      throw Error("variable '" + v + "' listed twice in a team domain");
    }
  }
}

}  // namespace

Team::Team(std::vector<std::string> vars) : vars_(std::move(vars)) {
  check_distinct(vars_);
}

Team::Team(std::vector<std::string> vars, std::vector<Tuple> rows)
    : vars_(std::move(vars)) {
  check_distinct(vars_);
  cells_.reserve(rows.size() * vars_.size());
  for (const auto& r : rows) {
    if (r.size() != vars_.size()) throw Error("row length mismatch");
    cells_.insert(cells_.end(), r.begin(), r.end());
  }
  rows_ = rows.size();
  normalize();
}

Team Team::from_cells(std::vector<std::string> vars,
                      std::vector<Element> cells) {
  Team t(std::move(vars));
  if (t.width() == 0) {
    t.rows_ = cells.empty() ? 0 : 1;
    return t;
  }
  if (cells.size() % t.width() != 0) throw Error("row length mismatch");
  t.rows_ = cells.size() / t.width();
  t.cells_ = std::move(cells);
  t.normalize();
  return t;
}

Team Team::from_assignments(std::vector<std::string> vars,
                            const std::vector<Assignment>& rows) {
  std::vector<Tuple> tuples;
  for (const auto& s : rows) {
    if (s.size() != vars.size()) throw Error("assignment domain mismatch");
    Tuple t;
    for (const auto& v : vars) {
      auto it = s.find(v);
      if (it == s.end()) throw Error("assignment missing variable " + v);
      t.push_back(it->second);
    }
    tuples.push_back(std::move(t));
  }
  return Team(std::move(vars), std::move(tuples));
}

Team Team::epsilon() {
  Team t;
  t.rows_ = 1;
  return t;
}

void Team::normalize() {
  const std::size_t w = width();
  if (w == 0) {
    rows_ = rows_ ? 1 : 0;
    return;
  }
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(
        cells_.begin() + a * w, cells_.begin() + (a + 1) * w,
        cells_.begin() + b * w, cells_.begin() + (b + 1) * w);
  };
  bool sorted_unique = true;
  for (std::size_t i = 1; i < rows_ && sorted_unique; ++i) {
    sorted_unique = less(i - 1, i);
  }
  if (sorted_unique) return;
  std::vector<std::size_t> order(rows_);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), less);
  std::vector<Element> out;
  out.reserve(cells_.size());
  std::size_t kept = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t i = order[k];
    if (kept > 0 &&
        std::equal(out.end() - w, out.end(), cells_.begin() + i * w)) {
      continue;
    }
    out.insert(out.end(), cells_.begin() + i * w, cells_.begin() + (i + 1) * w);
    ++kept;
  }
  cells_ = std::move(out);
  rows_ = kept;
}

Tuple Team::row_tuple(std::size_t i) const {
  auto r = row(i);
  return Tuple(r.begin(), r.end());
}

Assignment Team::assignment(std::size_t i) const {
  Assignment s;
  auto r = row(i);
  for (std::size_t c = 0; c < width(); ++c) s.emplace(vars_[c], r[c]);
  return s;
}

std::vector<Tuple> Team::rows() const {
  std::vector<Tuple> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_tuple(i));
  return out;
}

std::optional<std::size_t> Team::column(std::string_view var) const {
  for (std::size_t c = 0; c < vars_.size(); ++c) {
    if (vars_[c] == var) return c;
  }
  return std::nullopt;
}

std::optional<std::size_t> Team::find(std::span<const Element> r) const {
  if (r.size() != width()) return std::nullopt;
  if (width() == 0) {
    if (rows_ == 0) return std::nullopt;
    return 0;
  }
  std::size_t lo = 0, hi = rows_;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto m = row(mid);
    if (std::lexicographical_compare(m.begin(), m.end(), r.begin(), r.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < rows_ && std::equal(r.begin(), r.end(), row(lo).begin())) {
    return lo;
  }
  return std::nullopt;
}

bool Team::contains(std::span<const Element> r) const {
  return find(r).has_value();
}

Team Team::subteam(const std::vector<bool>& keep) const {
  Team t(vars_);
  if (width() == 0) {
    t.rows_ = (rows_ && !keep.empty() && keep[0]) ? 1 : 0;
    return t;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!keep[i]) continue;
    auto r = row(i);
    t.cells_.insert(t.cells_.end(), r.begin(), r.end());
    ++t.rows_;
  }
  return t;
}

Team Team::reordered(const std::vector<std::string>& vars) const {
  if (vars.size() != width()) throw Error("reordered: not a permutation");
  std::vector<std::size_t> src;
  for (const auto& v : vars) {
    auto c = column(v);
    if (!c) throw Error("reordered: unknown variable " + v);
    src.push_back(*c);
  }
  std::vector<Element> cells;
  cells.reserve(cells_.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    auto r = row(i);
    for (std::size_t c : src) cells.push_back(r[c]);
  }
  Team t(vars);
  t.cells_ = std::move(cells);
  t.rows_ = rows_;
  t.normalize();
  return t;
}

Team Team::restricted_to(const std::vector<std::string>& vars) const {
  std::vector<std::size_t> src;
  for (const auto& v : vars) {
    auto c = column(v);
    if (!c) throw Error("restricted_to: unknown variable " + v);
    src.push_back(*c);
  }
  Team t(vars);
  t.rows_ = rows_;
  if (vars.empty()) {
    t.rows_ = rows_ ? 1 : 0;
    return t;
  }
  t.cells_.reserve(rows_ * vars.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    auto r = row(i);
    for (std::size_t c : src) t.cells_.push_back(r[c]);
  }
  t.normalize();
  return t;
}

bool Team::same_assignments(const Team& other) const {
  if (width() != other.width() || size() != other.size()) return false;
  if (vars_ == other.vars_) return cells_ == other.cells_;
  for (const auto& v : vars_) {
    if (!other.has_var(v)) return false;
  }
  return reordered(other.vars_).cells_ == other.cells_;
}

bool Team::subset_of(const Team& other) const {
  if (width() != other.width()) return false;
  const Team mine = vars_ == other.vars_ ? *this : reordered(other.vars_);
  for (std::size_t i = 0; i < mine.size(); ++i) {
    if (!other.contains(mine.row(i))) return false;
  }
  return true;
}

Team team_union(const Team& a, const Team& b) {
  const Team bb = b.vars() == a.vars() ? b : b.reordered(a.vars());
  std::vector<Element> cells = a.cells();
  cells.insert(cells.end(), bb.cells().begin(), bb.cells().end());
  if (a.width() == 0) {
    return (a.empty() && b.empty()) ? Team() : Team::epsilon();
  }
  return Team::from_cells(a.vars(), std::move(cells));
}

}  // namespace teamsem
