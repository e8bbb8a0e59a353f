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


#include "teamsem/equivcheck.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

#include "teamsem/errors.h"
#include "teamsem/formula_ops.h"

namespace teamsem {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base && r > kSaturated / base) return kSaturated;
    r *= base;
  }
  return r;
}

std::vector<std::string> free_constants(const Signature& sig,
                                        std::size_t size) {
  std::vector<std::string> out;
  for (const auto& c : sig.constants) {
    bool element = false;
    for (std::size_t e = 0; e < size && !element; ++e) {
      element = c == std::to_string(e);
    }
    if (!element) out.push_back(c);
  }
  return out;
}

Tuple decode(std::uint64_t code, std::size_t arity, std::size_t n) {
  Tuple t(arity);
  for (std::size_t i = arity; i-- > 0;) {
    t[i] = static_cast<Element>(code % n);
    code /= n;
  }
  return t;
}

void collect_constants(const Formula& f, std::set<std::string>& out) {
  for (const auto& t : f.terms()) {
    if (t.is_constant()) out.insert(t.name);
  }
  for (std::size_t i = 0; i < f.num_children(); ++i) {
    collect_constants(f.child(i), out);
  }
  if (f.is(FormulaKind::kGenericDep)) collect_constants(f.sentence(), out);
}

void merge_relations(Signature& sig,
                     const std::map<std::string, std::size_t>& rels) {
  for (const auto& [name, k] : rels) {
    auto [it, inserted] = sig.relations.emplace(name, k);
    if (!inserted && it->second != k) {
      throw Error("relation " + name + " is used with arities " +
                  std::to_string(it->second) + " and " + std::to_string(k));
    }
  }
}

}  // namespace

std::uint64_t model_count(const Signature& sig, std::size_t size) {
  std::uint64_t bits = 0;
  for (const auto& [name, k] : sig.relations) {
    const std::uint64_t b = ipow(size, k);
    if (b >= 63 || bits + b >= 63) return kSaturated;
    bits += b;
  }
  const std::uint64_t rel_models = std::uint64_t{1} << bits;
  const std::uint64_t consts = ipow(size, free_constants(sig, size).size());
  if (consts && rel_models > kSaturated / consts) return kSaturated;
  return rel_models * consts;
}

Model model_at(const Signature& sig, std::size_t size, std::uint64_t index) {
  std::vector<std::string> names;
  for (std::size_t e = 0; e < size; ++e) names.push_back(std::to_string(e));
  Model m(std::move(names));
  for (const auto& [name, k] : sig.relations) {
    const std::uint64_t slots = ipow(size, k);
    std::vector<Tuple> tuples;
    for (std::uint64_t c = 0; c < slots; ++c) {
      if ((index >> c) & 1) tuples.push_back(decode(c, k, size));
    }
    index = slots >= 64 ? 0 : index >> slots;
    m.add_relation(name, Relation::from_tuples(k, size, std::move(tuples)));
  }
  for (const auto& c : free_constants(sig, size)) {
    m.set_constant(c, static_cast<Element>(index % size));
    index /= size;
  }
  return m;
}

std::vector<Model> enumerate_models(const Signature& sig, std::size_t size,
                                    std::uint64_t max_models) {
  if (size == 0) throw Error("model size must be at least 1");
  const std::uint64_t count = model_count(sig, size);
  if (count > max_models) {
    throw BudgetExceeded("too many models of size " + std::to_string(size));
  }
  std::vector<Model> out;
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(model_at(sig, size, i));
  return out;
}

std::uint64_t team_count(const Model& m,
                         const std::vector<std::string>& vars) {
  const std::uint64_t assignments = ipow(m.size(), vars.size());
  if (assignments >= 63) return kSaturated;
  return std::uint64_t{1} << assignments;
}

Team team_at(const Model& m, const std::vector<std::string>& vars,
             std::uint64_t index) {
  if (vars.empty()) return index ? Team::epsilon() : Team();
  const std::uint64_t assignments = ipow(m.size(), vars.size());
  std::vector<Tuple> rows;
  for (std::uint64_t c = 0; c < assignments && c < 64; ++c) {
    if ((index >> c) & 1) rows.push_back(decode(c, vars.size(), m.size()));
  }
  return Team(vars, std::move(rows));
}

std::vector<Team> enumerate_teams(const Model& m,
                                  const std::vector<std::string>& vars,
                                  std::uint64_t max_teams) {
  const std::uint64_t count = team_count(m, vars);
  if (count > max_teams) {
    throw BudgetExceeded("too many teams over " +
                         std::to_string(vars.size()) + " variables");
  }
  std::vector<Team> out;
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(team_at(m, vars, i));
  return out;
}

std::string Verdict::summary() const {
  switch (status) {
    case Status::kEquivalent:
      return "equivalent up to bound (" + std::to_string(pairs_checked) +
             " model/team pairs)";
    case Status::kCounterexample:
      return std::string("counterexample: first formula ") +
             (first ? "true" : "false") + ", second formula " +
             (second ? "true" : "false");
    case Status::kNoCounterexample:
      return "no counterexample found in " + std::to_string(pairs_checked) +
             " samples";
  }
  return {};
}

namespace {

struct Found {
  std::size_t size_pos;
  std::uint64_t model;
  std::uint64_t team;
  bool first, second;

  bool operator<(const Found& o) const {
    return std::tie(size_pos, model, team) <
           std::tie(o.size_pos, o.model, o.team);
  }
};

Model random_model(const Signature& sig, std::size_t size,
                   std::mt19937_64& rng) {
  std::vector<std::string> names;
  for (std::size_t e = 0; e < size; ++e) names.push_back(std::to_string(e));
  Model m(std::move(names));
  for (const auto& [name, k] : sig.relations) {
    const std::uint64_t slots = ipow(size, k);
    std::vector<Tuple> tuples;
    for (std::uint64_t c = 0; c < slots; ++c) {
      if (rng() & 1) tuples.push_back(decode(c, k, size));
    }
    m.add_relation(name, Relation::from_tuples(k, size, std::move(tuples)));
  }
  for (const auto& c : free_constants(sig, size)) {
    m.set_constant(c, static_cast<Element>(rng() % size));
  }
  return m;
}

Team random_team(const Model& m, const std::vector<std::string>& vars,
                 std::mt19937_64& rng) {
  if (vars.empty()) return Team::epsilon();
  const std::uint64_t assignments = ipow(m.size(), vars.size());
  std::vector<Tuple> rows;
  for (std::uint64_t c = 0; c < assignments; ++c) {
    if (rng() & 1) rows.push_back(decode(c, vars.size(), m.size()));
  }
  return Team(vars, std::move(rows));
}

}  // namespace

Verdict equivalent(const Formula& f1, const Formula& f2,
                   const Registry& registry, const EquivOptions& options) {
  const auto fv1 = free_vars(f1);
  const auto fv2 = free_vars(f2);
  if (fv1 != fv2) {
    throw Error("the formulas have different free variables");
  }
  const std::vector<std::string> vars(fv1.begin(), fv1.end());
  for (std::size_t s : options.sizes) {
    if (s < options.min_size || s == 0) {
      throw Error("model size " + std::to_string(s) +
                  " is below the minimum " + std::to_string(options.min_size));
    }
  }
  Signature sig = options.signature;
  merge_relations(sig, relation_symbols(f1));
  merge_relations(sig, relation_symbols(f2));
  collect_constants(f1, sig.constants);
  collect_constants(f2, sig.constants);

  Verdict verdict;
  if (options.samples > 0) {
    verdict.status = Verdict::Status::kNoCounterexample;
    std::mt19937_64 rng(options.seed);
    for (std::size_t size : options.sizes) {
      for (std::size_t i = 0; i < options.samples; ++i) {
        Model m = random_model(sig, size, rng);
        Team x = random_team(m, vars, rng);
        const bool a = eval(m, x, f1, registry, options.eval);
        const bool b = eval(m, x, f2, registry, options.eval);
        ++verdict.pairs_checked;
        if (a != b) {
          verdict.status = Verdict::Status::kCounterexample;
          verdict.model = std::move(m);
          verdict.team = std::move(x);
          verdict.first = a;
          verdict.second = b;
          return verdict;
        }
      }
    }
    return verdict;
  }

  struct Job {
    std::size_t size_pos;
    std::size_t size;
    std::uint64_t model;
  };
  std::vector<Job> jobs;
  for (std::size_t pos = 0; pos < options.sizes.size(); ++pos) {
    const std::size_t size = options.sizes[pos];
    const std::uint64_t count = model_count(sig, size);
    if (count > options.max_models) {
      throw BudgetExceeded("too many models of size " + std::to_string(size) +
                           "; use sampling");
    }
    if (!vars.empty()) {
      if (team_count(equality_model(size), vars) > options.max_teams) {
        throw BudgetExceeded("too many teams at size " + std::to_string(size) +
                             "; use sampling");
      }
    }
    for (std::uint64_t i = 0; i < count; ++i) jobs.push_back({pos, size, i});
  }

  std::mutex mu;
  std::optional<Found> best;
  std::exception_ptr failure;
  std::atomic<std::uint64_t> pairs{0};
  std::atomic<std::size_t> cutoff{jobs.size()};

  auto work = [&](std::size_t worker, std::size_t stride) {
    try {
      for (std::size_t j = worker; j < jobs.size(); j += stride) {
        if (j >= cutoff.load()) return;
        const Job& job = jobs[j];
        const Model m = model_at(sig, job.size, job.model);
        Evaluator e1(m, f1, registry, options.eval);
        Evaluator e2(m, f2, registry, options.eval);
        const std::uint64_t teams = vars.empty() ? 1 : team_count(m, vars);
        for (std::uint64_t t = 0; t < teams; ++t) {
          const Team x = vars.empty() ? Team::epsilon() : team_at(m, vars, t);
          const bool a = e1(x);
          const bool b = e2(x);
          ++pairs;
          if (a != b) {
            std::lock_guard<std::mutex> lock(mu);
            Found f{job.size_pos, job.model, t, a, b};
            if (!best || f < *best) best = f;
            std::size_t cur = cutoff.load();
            while (j < cur && !cutoff.compare_exchange_weak(cur, j)) {
            }
            return;
          }
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!failure) failure = std::current_exception();
      cutoff.store(0);
    }
  };

  const std::size_t threads = std::max<std::size_t>(1, options.threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(work, w, threads);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  verdict.pairs_checked = pairs.load();
  if (best) {
    verdict.status = Verdict::Status::kCounterexample;
    const std::size_t size = options.sizes[best->size_pos];
    verdict.model = model_at(sig, size, best->model);
    verdict.team = vars.empty() ? Team::epsilon()
                                : team_at(*verdict.model, vars, best->team);
    verdict.first = best->first;
    verdict.second = best->second;
  }
  return verdict;
}

Verdict equivalent(const Formula& f1, const Formula& f2,
                   const EquivOptions& options) {
  static const Registry* builtins = new Registry(builtin_registry());
  return equivalent(f1, f2, *builtins, options);
}

}  // namespace teamsem
