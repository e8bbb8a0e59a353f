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


#include <gtest/gtest.h>

#include "teamsem/equivcheck.h"
#include "teamsem/errors.h"
#include "teamsem/rewrite.h"
#include "teamsem/semantics.h"
#include "teamsem/text_io.h"

namespace teamsem {
namespace {

Formula P(const char* text) { return parse_formula(text); }

TEST(EnumerateModels, Counts) {
  Signature e;
  e.relations["E"] = 2;
  EXPECT_EQ(enumerate_models(e, 2).size(), 16u);
  EXPECT_EQ(enumerate_models(Signature{}, 3).size(), 1u);
  EXPECT_EQ(enumerate_models(e, 3).size(), 512u);
  EXPECT_EQ(model_count(e, 3), 512u);
  EXPECT_EQ(model_at(e, 2, 5), enumerate_models(e, 2)[5]);
}

TEST(EnumerateTeams, Counts) {
  const Model m = equality_model(2);
  EXPECT_EQ(enumerate_teams(m, {"x"}).size(), 4u);
  EXPECT_EQ(enumerate_teams(m, {"x", "y"}).size(), 16u);
  const auto none = enumerate_teams(m, {});
  ASSERT_EQ(none.size(), 2u);
  EXPECT_TRUE(none[0].empty());
  EXPECT_EQ(none[1], Team::epsilon());
  EXPECT_EQ(team_count(m, {"x", "y"}), 16u);
}

TEST(Equivalent, DisjunctionToHooks) {
  const Formula f = P("x = y \\/ E(x,y)");
  const Verdict v = equivalent(f, disj_to_hook(f).formula);
  EXPECT_TRUE(v.equivalent()) << v.summary();
}

TEST(Equivalent, Diamond) {
  const Verdict v = equivalent(P("<> const(x)"), P("(ne(x) /\\ const(x)) \\/ top"));
  EXPECT_TRUE(v.equivalent()) << v.summary();
}

TEST(Equivalent, CounterexampleReplays) {
  EquivOptions o;
  o.sizes = {2};
  const Formula a = P("const(x)"), b = P("nc(x)");
  const Verdict v = equivalent(a, b, o);
  ASSERT_TRUE(v.counterexample());
  const Registry reg = builtin_registry();
  EXPECT_EQ(eval(*v.model, *v.team, a, reg), v.first);
  EXPECT_EQ(eval(*v.model, *v.team, b, reg), v.second);
  EXPECT_NE(v.first, v.second);
  // Symmetric and deterministic.
  const Verdict w = equivalent(b, a, o);
  ASSERT_TRUE(w.counterexample());
  EXPECT_EQ(*w.team, *v.team);
  EXPECT_EQ(w.first, v.second);
}

TEST(Equivalent, TwoValuedTeamSeparatesConstancy) {
  const Model m = equality_model(2);
  const Registry reg = builtin_registry();
  const Team both({"x"}, {{0}, {1}});
  EXPECT_NE(eval(m, both, P("const(x)"), reg), eval(m, both, P("nc(x)"), reg));
}

TEST(Equivalent, ThreadsGiveTheSameVerdict) {
  EquivOptions one, four;
  one.sizes = four.sizes = {2, 3};
  four.threads = 4;
  const Formula a = P("forall y. (E(x,y) \\/ const(y))");
  const Formula b = P("forall y. (E(x,y) \\/ nc(y))");
  const Verdict v1 = equivalent(a, b, one), v4 = equivalent(a, b, four);
  ASSERT_EQ(v1.status, v4.status);
  ASSERT_TRUE(v1.counterexample());
  EXPECT_EQ(*v1.model, *v4.model);
  EXPECT_EQ(*v1.team, *v4.team);
}

TEST(Equivalent, SamplingNeverClaimsEquivalence) {
  EquivOptions o;
  o.samples = 50;
  const Verdict v = equivalent(P("nc(x)"), P("forall w. (w != x => all(w))"), o);
  EXPECT_EQ(v.status, Verdict::Status::kNoCounterexample);
}

TEST(Equivalent, Preconditions) {
  EXPECT_THROW(equivalent(P("x = x"), P("y = y")), Error);
  EquivOptions o;
  o.sizes = {1};
  EXPECT_THROW(equivalent(P("x = x"), P("x = x"), o), Error);
  o.min_size = 1;
  EXPECT_TRUE(equivalent(P("x = x"), P("x = x"), o).equivalent());
}

}  // namespace
}  // namespace teamsem
