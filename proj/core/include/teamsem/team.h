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

#ifndef TEAMSEM_TEAM_H_
#define TEAMSEM_TEAM_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "teamsem/model.h"

namespace teamsem {

using Assignment = std::map<std::string, Element, std::less<>>;

// A set of assignments over a common ordered variable domain. Rows are stored
// flat, sorted lexicographically and without duplicates.
class Team {
 public:
  // The empty team over the empty variable domain.
  Team() = default;
  // The empty team over vars.
  explicit Team(std::vector<std::string> vars);
  Team(std::vector<std::string> vars, std::vector<Tuple> rows);
  // Rows given as a flat row-major array.
  static Team from_cells(std::vector<std::string> vars,
                         std::vector<Element> cells);
  static Team from_assignments(std::vector<std::string> vars,
                               const std::vector<Assignment>& rows);
  // {ε}: one empty assignment.
  static Team epsilon();

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t width() const { return vars_.size(); }
  std::size_t size() const { return rows_; }
  bool empty() const { return rows_ == 0; }

  std::span<const Element> row(std::size_t i) const {
    return {cells_.data() + i * width(), width()};
  }
  Tuple row_tuple(std::size_t i) const;
  Assignment assignment(std::size_t i) const;
  std::vector<Tuple> rows() const;
  const std::vector<Element>& cells() const { return cells_; }

  std::optional<std::size_t> column(std::string_view var) const;
  bool has_var(std::string_view var) const { return column(var).has_value(); }
  bool contains(std::span<const Element> row) const;
  std::optional<std::size_t> find(std::span<const Element> row) const;

  // Rows i with keep[i].
  Team subteam(const std::vector<bool>& keep) const;
  // Same rows with the columns permuted to vars (a permutation of vars()).
  Team reordered(const std::vector<std::string>& vars) const;
  // Rows restricted to vars (a subset of vars()), duplicates collapsed.
  Team restricted_to(const std::vector<std::string>& vars) const;

  // Equal as sets of assignments; column order is ignored.
  bool same_assignments(const Team& other) const;
  // Every assignment of this team is in other (same variable set).
  bool subset_of(const Team& other) const;

  bool operator==(const Team& other) const {
    return vars_ == other.vars_ && rows_ == other.rows_ &&
           cells_ == other.cells_;
  }

 private:
  void normalize();

  std::vector<std::string> vars_;
  std::vector<Element> cells_;
  std::size_t rows_ = 0;
};

// Union of two teams over the same variable set (column order of a).
Team team_union(const Team& a, const Team& b);

}  // namespace teamsem

#endif  // TEAMSEM_TEAM_H_
