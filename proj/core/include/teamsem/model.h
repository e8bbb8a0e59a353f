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

#ifndef TEAMSEM_MODEL_H_
#define TEAMSEM_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "teamsem/formula.h"

namespace teamsem {

// Index of a domain element in the model's domain order.
using Element = std::uint16_t;
using Tuple = std::vector<Element>;

// A set of k-tuples over a domain of fixed size. Tuples are kept sorted; a
// dense membership bitmap is kept when domain_size^arity is small.
class Relation {
 public:
  Relation() = default;
  Relation(std::size_t arity, std::size_t domain_size);
  static Relation from_tuples(std::size_t arity, std::size_t domain_size,
                              std::vector<Tuple> tuples);

  std::size_t arity() const { return arity_; }
  std::size_t domain_size() const { return domain_size_; }
  std::size_t size() const { return tuples_.size(); }
  bool empty() const { return tuples_.empty(); }
  const std::vector<Tuple>& tuples() const { return tuples_; }

  bool contains(std::span<const Element> tuple) const;
  // Returns false when the tuple was already present.
  bool insert(std::span<const Element> tuple);

  bool operator==(const Relation& other) const {
    return arity_ == other.arity_ && tuples_ == other.tuples_;
  }

 private:
  std::size_t index_of(std::span<const Element> tuple) const;

  std::size_t arity_ = 0;
  std::size_t domain_size_ = 0;
  std::vector<Tuple> tuples_;
  std::vector<bool> dense_;
  bool use_dense_ = false;
};

// Finite relational structure. Element names are opaque tokens.
class Model {
 public:
  Model() = default;
  explicit Model(std::vector<std::string> domain);

  std::size_t size() const { return domain_.size(); }
  const std::vector<std::string>& domain() const { return domain_; }
  const std::string& element_name(Element e) const { return domain_.at(e); }
  std::optional<Element> element(std::string_view name) const;

  // Throws Error on duplicates or tuples outside the domain.
  void add_relation(const std::string& name, Relation relation);
  const Relation* relation(std::string_view name) const;
  const std::map<std::string, Relation, std::less<>>& relations() const {
    return relations_;
  }

  void set_constant(const std::string& name, Element e);
  // Explicit constants first, then element names.
  std::optional<Element> constant(std::string_view name) const;
  const std::map<std::string, Element, std::less<>>& constants() const {
    return constants_;
  }

  // Relations with arities; constants are the explicit constants plus every
  // element name.
  Signature signature() const;

  bool operator==(const Model& other) const {
    return domain_ == other.domain_ && relations_ == other.relations_ &&
           constants_ == other.constants_;
  }

 private:
  std::vector<std::string> domain_;
  std::map<std::string, Element, std::less<>> index_;
  std::map<std::string, Relation, std::less<>> relations_;
  std::map<std::string, Element, std::less<>> constants_;
};

// Domain {"0", ..., "n-1"} with no relations.
Model equality_model(std::size_t n);

}  // namespace teamsem

#endif  // TEAMSEM_MODEL_H_
