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

#include <cctype>
#include <sstream>

#include "lexer.h"
#include "teamsem/text_io.h"

namespace teamsem {

namespace {

std::string term_text(const Term& t) {
  if (t.is_variable()) return t.name;
  bool bare = !t.name.empty() &&
              std::isdigit(static_cast<unsigned char>(t.name[0]));
  for (char c : t.name) bare = bare && internal::is_ident_char(c);
  return bare ? t.name : "'" + t.name;
}

void print_terms(std::ostream& os, const Terms& ts, std::size_t from,
                 std::size_t to) {
  for (std::size_t i = from; i < to; ++i) {
    if (i > from) os << ',';
    os << term_text(ts[i]);
  }
}

void print(std::ostream& os, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::kLiteral:
      switch (f.literal_kind()) {
        case LiteralKind::kTruth:
          os << (f.negated() ? "!top" : "top");
          return;
        case LiteralKind::kEquality:
          os << term_text(f.terms()[0]) << (f.negated() ? " != " : " = ")
             << term_text(f.terms()[1]);
          return;
        case LiteralKind::kRelation:
          if (f.negated()) os << '!';
          os << f.name() << '(';
          print_terms(os, f.terms(), 0, f.terms().size());
          os << ')';
          return;
      }
      return;
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
    case FormulaKind::kHook: {
      const char* op = f.is(FormulaKind::kAnd)  ? " /\\ "
                       : f.is(FormulaKind::kOr) ? " \\/ "
                                                : " => ";
      os << '(';
      print(os, f.child(0));
      os << op;
      print(os, f.child(1));
      os << ')';
      return;
    }
    case FormulaKind::kExists:
    case FormulaKind::kForall: {
      const FormulaKind k = f.kind();
      os << (k == FormulaKind::kExists ? "exists" : "forall");
      const Formula* cur = &f;
      while (cur->is(k)) {
        os << ' ' << cur->var();
        cur = &cur->body();
      }
      os << ". ";
      print(os, *cur);
      return;
    }
    case FormulaKind::kDiamond:
      os << "<> ";
      if (f.body().is_binary()) {
        print(os, f.body());
      } else {
        os << '(';
        print(os, f.body());
        os << ')';
      }
      return;
    case FormulaKind::kDepAtom: {
      os << f.name() << '(';
      const std::size_t n = f.terms().size();
      if (f.split() && *f.split() <= n) {
        print_terms(os, f.terms(), 0, *f.split());
        os << " ; ";
        print_terms(os, f.terms(), *f.split(), n);
      } else {
        print_terms(os, f.terms(), 0, n);
      }
      os << ')';
      return;
    }
    case FormulaKind::kGenericDep:
      os << '[' << f.name() << " : ";
      print_terms(os, f.terms(), 0, f.terms().size());
      os << "] { ";
      print(os, f.sentence());
      os << " }";
      return;
  }
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::ostringstream os;
  print(os, f);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  print(os, f);
  return os;
}

}  // namespace teamsem
