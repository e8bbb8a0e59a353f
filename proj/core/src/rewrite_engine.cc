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


#include "rewrite_engine.h"

#include <algorithm>
#include <sstream>

#include "teamsem/errors.h"
#include "teamsem/formula_ops.h"

namespace teamsem {

void RewriteTrace::append(const RewriteTrace& other) {
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
  for (const auto& n : other.notes) {
    if (std::find(notes.begin(), notes.end(), n) == notes.end()) {
      notes.push_back(n);
    }
  }
}

Formula replay(const Formula& input, const RewriteTrace& trace) {
  Formula cur = input;
  for (const auto& step : trace.steps) {
    if (!(subformula_at(cur, step.path) == step.before)) {
      throw FormulaError("replay mismatch for rule " + step.rule + " at " +
                         path_to_string(step.path));
    }
    cur = replace_at(cur, step.path, step.after);
  }
  return cur;
}

std::string format_trace(const RewriteTrace& trace) {
  std::ostringstream os;
  for (const auto& n : trace.notes) os << "note: " << n << '\n';
  std::size_t i = 0;
  for (const auto& s : trace.steps) {
    os << ++i << ". " << s.rule << " at " << path_to_string(s.path) << '\n'
       << "   before: " << s.before << '\n'
       << "   after:  " << s.after << '\n';
    if (!s.fresh.empty()) {
      os << "   fresh:";
      for (const auto& v : s.fresh) os << ' ' << v;
      os << '\n';
    }
  }
  return os.str();
}

namespace internal {

namespace {

struct Found {
  Path path;
  RuleHit hit;
};

std::optional<Found> find(const Formula& f, Path& path, const Rule& rule,
                          const EngineOptions& options,
                          const std::set<std::string>& used) {
  if (options.order == Order::kPre) {
    if (auto hit = rule(f, used)) return Found{path, std::move(*hit)};
  }
  for (std::size_t i = 0; i < f.num_children(); ++i) {
    if (f.is(FormulaKind::kHook) && i == 0 && !options.enter_antecedents) {
      continue;
    }
    path.push_back(static_cast<std::uint8_t>(i));
    auto found = find(f.child(i), path, rule, options, used);
    path.pop_back();
    if (found) return found;
  }
  if (options.order == Order::kPost) {
    if (auto hit = rule(f, used)) return Found{path, std::move(*hit)};
  }
  return std::nullopt;
}

}  // namespace

Formula record_step(const Formula& f, const Path& path, std::string rule,
                    Formula after, std::vector<std::string> fresh,
                    RewriteTrace& trace) {
  RewriteStep step;
  step.rule = std::move(rule);
  step.path = path;
  step.before = subformula_at(f, path);
  step.after = std::move(after);
  step.fresh = std::move(fresh);
  Formula out = replace_at(f, path, step.after);
  trace.steps.push_back(std::move(step));
  return out;
}

Formula rewrite_fixpoint(const Formula& f, const Rule& rule,
                         const EngineOptions& options, RewriteTrace& trace) {
  Formula cur = f;
  std::set<std::string> used = all_vars(f);
  for (std::size_t n = 0;; ++n) {
    if (n >= options.max_steps) {
      throw FormulaError("rewrite did not terminate within " +
                         std::to_string(options.max_steps) + " steps");
    }
    Path path;
    auto found = find(cur, path, rule, options, used);
    if (!found) return cur;
    used.insert(found->hit.fresh.begin(), found->hit.fresh.end());
    cur = record_step(cur, found->path, std::move(found->hit.rule),
                      std::move(found->hit.after), std::move(found->hit.fresh),
                      trace);
  }
}

}  // namespace internal

}  // namespace teamsem
