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
#include <functional>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

#include "lexer.h"
#include "teamsem/errors.h"
#include "teamsem/formula_ops.h"
#include "teamsem/text_io.h"

namespace teamsem {

namespace {

struct Line {
  std::string_view text;  // comment stripped
  std::size_t offset = 0;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    out.push_back({line, start});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

bool is_element_char(char c) { return internal::is_ident_char(c); }

// Scanner over one line with spans relative to the whole text.
class LineScanner {
 public:
  explicit LineScanner(const Line& line) : line_(line) {}

  void skip_space() {
    while (pos_ < line_.text.size() &&
           std::isspace(static_cast<unsigned char>(line_.text[pos_]))) {
      ++pos_;
    }
  }
  bool done() {
    skip_space();
    return pos_ >= line_.text.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < line_.text.size() && line_.text[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_space();
    if (line_.text.substr(pos_, w.size()) == w) {
      const std::size_t after = pos_ + w.size();
      if (after < line_.text.size() && is_element_char(line_.text[after])) {
        return false;
      }
      pos_ = after;
      return true;
    }
    return false;
  }
  // A run of name characters.
  std::string name() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < line_.text.size() && is_element_char(line_.text[pos_])) {
      ++pos_;
    }
    if (pos_ == start) error("expected a name");
    last_ = {line_.offset + start, line_.offset + pos_};
    return std::string(line_.text.substr(start, pos_ - start));
  }
  std::size_t number() {
    const std::string s = name();
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("expected a number", last_);
      }
    }
    return std::stoul(s);
  }
  SourceSpan last() const { return last_; }
  [[noreturn]] void error(const std::string& message) const {
    throw ParseError(message, {line_.offset + pos_, line_.offset + pos_});
  }

 private:
  const Line& line_;
  std::size_t pos_ = 0;
  SourceSpan last_;
};

Element resolve(const Model& m, const std::string& name, SourceSpan span) {
  auto e = m.element(name);
  if (!e) throw ParseError("unknown element '" + name + "'", span);
  return *e;
}

}  // namespace

Model parse_model(std::string_view text, std::vector<std::string>* warnings) {
  std::optional<Model> model;
  for (const Line& line : split_lines(text)) {
    LineScanner sc(line);
    if (sc.done()) continue;
    if (sc.accept_word("domain")) {
      sc.expect(':');
      if (model) sc.error("domain declared twice");
      std::vector<std::string> names;
      std::set<std::string> seen;
      while (!sc.done()) {
        names.push_back(sc.name());
        if (!seen.insert(names.back()).second) {
          throw ParseError("duplicate element '" + names.back() + "'",
                           sc.last());
        }
      }
      if (names.empty()) sc.error("the domain must not be empty");
      if (names.size() == 1 && warnings) {
        warnings->push_back(
            "model has a single element; equivalences assuming at least two "
            "elements do not apply");
      }
      model.emplace(std::move(names));
      continue;
    }
    if (sc.accept_word("rel")) {
      if (!model) sc.error("'domain:' must come before relations");
      const std::string name = sc.name();
      const SourceSpan name_span = sc.last();
      sc.expect('/');
      const std::size_t arity = sc.number();
      sc.expect(':');
      if (arity == 0) throw ParseError("arity must be at least 1", sc.last());
      if (model->relation(name)) {
        throw ParseError("duplicate relation declaration '" + name + "'",
                         name_span);
      }
      Relation r(arity, model->size());
      while (!sc.done()) {
        sc.expect('(');
        Tuple t;
        if (!sc.accept(')')) {
          do {
            const std::string el = sc.name();
            t.push_back(resolve(*model, el, sc.last()));
          } while (sc.accept(','));
          sc.expect(')');
        }
        if (t.size() != arity) {
          sc.error("tuple of length " + std::to_string(t.size()) +
                   " in a relation of arity " + std::to_string(arity));
        }
        r.insert(t);
      }
      model->add_relation(name, std::move(r));
      continue;
    }
    if (sc.accept_word("const")) {
      if (!model) sc.error("'domain:' must come before constants");
      const std::string name = sc.name();
      sc.expect('=');
      const std::string el = sc.name();
      model->set_constant(name, resolve(*model, el, sc.last()));
      continue;
    }
    sc.error("expected 'domain:', 'rel' or 'const'");
  }
  if (!model) throw ParseError("missing 'domain:' line", {0, 0});
  return *std::move(model);
}

std::string print_model(const Model& m) {
  std::ostringstream os;
  os << "domain:";
  for (const auto& n : m.domain()) os << ' ' << n;
  os << '\n';
  for (const auto& [name, r] : m.relations()) {
    os << "rel " << name << '/' << r.arity() << ':';
    for (const auto& t : r.tuples()) {
      os << " (";
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) os << ',';
        os << m.element_name(t[i]);
      }
      os << ')';
    }
    os << '\n';
  }
  for (const auto& [name, e] : m.constants()) {
    os << "const " << name << " = " << m.element_name(e) << '\n';
  }
  return os.str();
}

Team parse_team(std::string_view text, const Model& m) {
  std::optional<std::vector<std::string>> vars;
  std::vector<Tuple> rows;
  for (const Line& line : split_lines(text)) {
    LineScanner sc(line);
    if (sc.done()) continue;
    if (sc.accept_word("vars")) {
      sc.expect(':');
      if (vars) sc.error("variables declared twice");
      vars.emplace();
      std::set<std::string> seen;
      while (!sc.done()) {
        std::string v = sc.name();
        if (!internal::is_ident_start(v[0])) {
          throw ParseError("'" + v + "' is not a variable name", sc.last());
        }
        if (!seen.insert(v).second) {
          throw ParseError("variable '" + v + "' listed twice", sc.last());
        }
        vars->push_back(std::move(v));
      }
      continue;
    }
    if (sc.accept_word("row")) {
      sc.expect(':');
      if (!vars) sc.error("'vars:' must come before rows");
      Tuple t;
      while (!sc.done()) {
        const std::string el = sc.name();
        t.push_back(resolve(m, el, sc.last()));
      }
      if (t.size() != vars->size()) {
        sc.error("row has " + std::to_string(t.size()) + " values for " +
                 std::to_string(vars->size()) + " variables");
      }
      rows.push_back(std::move(t));
      continue;
    }
    sc.error("expected 'vars:' or 'row:'");
  }
  if (!vars) throw ParseError("missing 'vars:' line", {0, 0});
  if (vars->empty()) return rows.empty() ? Team() : Team::epsilon();
  return Team(*std::move(vars), std::move(rows));
}

std::string print_team(const Team& t, const Model& m) {
  std::ostringstream os;
  os << "vars:";
  for (const auto& v : t.vars()) os << ' ' << v;
  os << '\n';
  for (std::size_t i = 0; i < t.size(); ++i) {
    os << "row:";
    for (Element e : t.row(i)) os << ' ' << m.element_name(e);
    os << '\n';
  }
  return os.str();
}

std::string format_team(const Team& t, const Model& m) {
  if (t.width() == 0) return t.empty() ? "{}" : "{ε}";
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ", ";
    auto r = t.row(i);
    for (std::size_t c = 0; c < t.width(); ++c) {
      if (c) os << ' ';
      os << t.vars()[c] << '=' << m.element_name(r[c]);
    }
  }
  os << '}';
  return os.str();
}

Registry load_dependency_defs(std::string_view text, Registry registry) {
  static const std::regex kDef(
      R"(^\s*dep\s+([A-Za-z_][A-Za-z0-9_]*)\s*/\s*([0-9]+)\s*:=\s*(.*\S)\s*$)");
  for (const Line& line : split_lines(text)) {
    const std::string s(line.text);
    if (s.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::smatch match;
    if (!std::regex_match(s, match, kDef)) {
      throw ParseError("expected 'dep NAME/ARITY := SENTENCE'",
                       {line.offset, line.offset + s.size()});
    }
    const std::string name = match[1];
    const std::size_t arity = std::stoul(match[2]);
    const std::size_t body_at = line.offset + match.position(3);
    const SourceSpan whole{line.offset, line.offset + s.size()};
    if (arity == 0) throw ParseError("arity must be at least 1", whole);
    if (registry.has_name(name)) {
      throw ParseError("dependency '" + name + "' is already defined", whole);
    }
    Formula sentence = Formula::truth();
    {
      Registry none;
      try {
        sentence = parse_formula(match.str(3), none);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), {body_at + e.span().begin,
                                    body_at + e.span().end});
      }
    }
    if (!is_first_order(sentence)) {
      throw ParseError("dependency sentence must be first-order", whole);
    }
    if (!is_sentence(sentence)) {
      throw ParseError("dependency sentence has free variables", whole);
    }
    for (const auto& [rel, k] : relation_symbols(sentence)) {
      if (rel != "R") {
        throw ParseError("unknown symbol " + rel +
                             ": only R and equality may be used",
                         whole);
      }
      if (k != arity) {
        throw ParseError("R used with arity " + std::to_string(k) +
                             ", declared " + std::to_string(arity),
                         whole);
      }
    }
    bool constant_used = false;
    std::function<void(const Formula&)> scan = [&](const Formula& f) {
      for (const auto& t : f.terms()) constant_used |= t.is_constant();
      for (std::size_t i = 0; i < f.num_children(); ++i) scan(f.child(i));
    };
    scan(sentence);
    if (constant_used) {
      throw ParseError("dependency sentences may not use constants", whole);
    }
    DependencySpec d;
    d.name = name;
    d.arity = arity;
    d.sentence = sentence;
    d.kind = DependencyKind::kUserDefined;
    registry.add(std::move(d));
  }
  return registry;
}

}  // namespace teamsem
