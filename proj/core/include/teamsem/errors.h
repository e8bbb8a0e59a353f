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

#ifndef TEAMSEM_ERRORS_H_
#define TEAMSEM_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace teamsem {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Byte offsets into parsed text; begin <= end.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, SourceSpan span)
      : Error(message), span_(span) {}
  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

// A formula does not have the shape an operation requires (open formula where
// a sentence is needed, dependency atom where first-order input is needed...).
class FormulaError : public Error {
 public:
  using Error::Error;
};

// Unbound variables, unknown relations, unresolvable constants.
class EvalError : public Error {
 public:
  using Error::Error;
};

// A resource cap was hit. Never a truth value.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace teamsem

#endif  // TEAMSEM_ERRORS_H_
