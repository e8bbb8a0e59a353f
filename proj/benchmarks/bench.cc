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


#include <benchmark/benchmark.h>

#include "teamsem/equivcheck.h"
#include "teamsem/errors.h"
#include "teamsem/rewrite.h"
#include "teamsem/semantics.h"
#include "teamsem/structures.h"
#include "teamsem/text_io.h"

namespace teamsem {
namespace {

const Registry& reg() {
  static const Registry r = builtin_registry();
  return r;
}

// Argument: 0 for A_n, 1 for B_n; n in the second argument.
void BM_NonconnDefault(benchmark::State& state) {
  const int n = static_cast<int>(state.range(1));
  const Model m = state.range(0) == 0 ? graph_An(n) : graph_Bn(n);
  Evaluator ev(m, nonconn_sentence(), reg());
  for (auto _ : state) benchmark::DoNotOptimize(ev(Team::epsilon()));
}
BENCHMARK(BM_NonconnDefault)->ArgsProduct({{0, 1}, {1, 2, 3}})
    ->Unit(benchmark::kMillisecond);

// Without the guard the lax choices for y blow up; reported as an error once
// the branch budget runs out.
void BM_NonconnNoGuard(benchmark::State& state) {
  EvalOptions o;
  o.constancy_guard = false;
  o.budget.max_branches = 5'000'000;
  const Model m = graph_An(1);
  Evaluator ev(m, nonconn_sentence(), reg(), o);
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(ev(Team::epsilon()));
    } catch (const BudgetExceeded& e) {
      state.SkipWithError(e.what());
      break;
    }
  }
}
BENCHMARK(BM_NonconnNoGuard)->Unit(benchmark::kMillisecond);

void BM_Automorphisms(benchmark::State& state) {
  const Model m = graph_An(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(m).size());
}
BENCHMARK(BM_Automorphisms)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_EquivDisjToHook(benchmark::State& state) {
  const Formula f = parse_formula("forall y. (E(x,y) \\/ const(y))");
  const Formula g = disj_to_hook(f).formula;
  EquivOptions o;
  o.sizes = {static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(equivalent(f, g, o).status);
}
BENCHMARK(BM_EquivDisjToHook)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_EquivNcExpansion(benchmark::State& state) {
  const Formula f = parse_formula("nc(x)");
  const Formula g = expand_macros(f).formula;
  EquivOptions o;
  o.sizes = {2, 3};
  for (auto _ : state) benchmark::DoNotOptimize(equivalent(f, g, o).status);
}
BENCHMARK(BM_EquivNcExpansion)->Unit(benchmark::kMillisecond);

void BM_Prenex(benchmark::State& state) {
  const Formula f = parse_formula(
      "forall x. ((exists y. (E(x,y) /\\ ne(y))) \\/ (forall y. !E(x,y)))");
  for (auto _ : state) benchmark::DoNotOptimize(to_prenex(f).formula.size());
}
BENCHMARK(BM_Prenex);

void BM_NormalForm(benchmark::State& state) {
  const Formula f = nonconn_sentence();
  for (auto _ : state) {
    benchmark::DoNotOptimize(to_normal_form(f).formula.size());
  }
}
BENCHMARK(BM_NormalForm);

}  // namespace
}  // namespace teamsem

BENCHMARK_MAIN();
