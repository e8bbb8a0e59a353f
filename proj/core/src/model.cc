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

#include "teamsem/model.h"

#include <algorithm>

#include "teamsem/errors.h"

namespace teamsem {

namespace {

constexpr std::size_t kMaxDenseCells = std::size_t{1} << 22;

}  // namespace

Relation::Relation(std::size_t arity, std::size_t domain_size)
    : arity_(arity), domain_size_(domain_size) {
  std::size_t cells = 1;
  use_dense_ = true;
  for (std::size_t i = 0; i < arity_; ++i) {
    if (domain_size_ != 0 && cells > kMaxDenseCells / domain_size_) {
      use_dense_ = false;
      break;
    }
    cells *= domain_size_;
  }
  if (use_dense_) dense_.assign(cells, false);
}

Relation Relation::from_tuples(std::size_t arity, std::size_t domain_size,
                               std::vector<Tuple> tuples) {
  Relation r(arity, domain_size);
  for (const auto& t : tuples) {
    if (t.size() != arity) throw Error("tuple length differs from arity");
    for (Element e : t) {
      if (e >= domain_size) throw Error("tuple element outside the domain");
    }
  }
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
  if (r.use_dense_) {
    for (const auto& t : tuples) r.dense_[r.index_of(t)] = true;
  }
  r.tuples_ = std::move(tuples);
  return r;
}

std::size_t Relation::index_of(std::span<const Element> tuple) const {
  std::size_t idx = 0;
  for (Element e : tuple) idx = idx * domain_size_ + e;
  return idx;
}

bool Relation::contains(std::span<const Element> tuple) const {
  if (tuple.size() != arity_) return false;
  if (use_dense_) return dense_[index_of(tuple)];
  return std::binary_search(
      tuples_.begin(), tuples_.end(), tuple,
      [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(),
                                            b.end());
      });
}

bool Relation::insert(std::span<const Element> tuple) {
  if (tuple.size() != arity_) throw Error("tuple length differs from arity");
  for (Element e : tuple) {
    if (e >= domain_size_) throw Error("tuple element outside the domain");
  }
  if (contains(tuple)) return false;
  Tuple t(tuple.begin(), tuple.end());
  tuples_.insert(std::lower_bound(tuples_.begin(), tuples_.end(), t), t);
  if (use_dense_) dense_[index_of(tuple)] = true;
  return true;
}

Model::Model(std::vector<std::string> domain) : domain_(std::move(domain)) {
  if (domain_.size() > 0xFFFF) throw Error("domain too large");
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    if (!index_.emplace(domain_[i], static_cast<Element>(i)).second) {
      throw Error("duplicate domain element '" + domain_[i] + "'");
    }
  }
}

std::optional<Element> Model::element(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Model::add_relation(const std::string& name, Relation relation) {
  if (relations_.count(name)) {
    throw Error("duplicate relation declaration '" + name + "'");
  }
  if (relation.arity() == 0) throw Error("relation arity must be at least 1");
  if (relation.domain_size() != size()) {
    throw Error("relation '" + name + "' built over a different domain");
  }
  relations_.emplace(name, std::move(relation));
}

const Relation* Model::relation(std::string_view name) const {
  auto it = relations_.find(name);
  return it == relations_.end() ? nullptr : &it->second;
}

void Model::set_constant(const std::string& name, Element e) {
  if (e >= size()) throw Error("constant outside the domain");
  constants_[name] = e;
}

std::optional<Element> Model::constant(std::string_view name) const {
  auto it = constants_.find(name);
  if (it != constants_.end()) return it->second;
  return element(name);
}

Signature Model::signature() const {
  Signature sig;
  for (const auto& [name, rel] : relations_) sig.relations[name] = rel.arity();
  for (const auto& [name, e] : constants_) sig.constants.insert(name);
  for (const auto& name : domain_) sig.constants.insert(name);
  return sig;
}

Model equality_model(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return Model(std::move(names));
}

}  // namespace teamsem
