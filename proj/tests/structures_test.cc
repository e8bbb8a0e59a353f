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

#include <algorithm>
#include <random>

#include "oracle.h"
#include "teamsem/errors.h"
#include "teamsem/formula_ops.h"
#include "teamsem/semantics.h"
#include "teamsem/structures.h"
#include "teamsem/text_io.h"

namespace teamsem {
namespace {

std::size_t undirected_edges(const Model& m) {
  std::size_t n = 0;
  for (const auto& t : m.relation("E")->tuples()) n += t[0] < t[1];
  return n;
}

TEST(Generators, Sizes) {
  const Model a = graph_An(1), b = graph_Bn(1);
  EXPECT_EQ(a.size(), 8u);
  EXPECT_EQ(b.size(), 8u);
  EXPECT_EQ(undirected_edges(a), 8u);
  EXPECT_EQ(undirected_edges(b), 8u);
  EXPECT_EQ(a.relation("E")->size(), 16u);
  EXPECT_EQ(a.domain()[0], "c0_0");
  EXPECT_EQ(b.domain()[0], "v_0");
  for (int n = 1; n <= 4; ++n) {
    EXPECT_EQ(graph_An(n).size(), graph_Bn(n).size());
    EXPECT_EQ(graph_An(n).size(), std::size_t{1} << (n + 2));
  }
  EXPECT_THROW(graph_An(0), Error);
  EXPECT_THROW(graph_Bn(13), Error);
}

TEST(Generators, EveryVertexHasDegreeTwo) {
  for (const Model& m : {graph_An(2), graph_Bn(2)}) {
    std::vector<int> degree(m.size());
    for (const auto& t : m.relation("E")->tuples()) ++degree[t[0]];
    EXPECT_TRUE(std::all_of(degree.begin(), degree.end(),
                            [](int d) { return d == 2; }));
  }
}

TEST(Automorphisms, AgreeWithBruteForce) {
  for (const Model& m : {graph_An(1), graph_Bn(1)}) {
    auto fast = automorphisms(m);
    auto brute = oracle::brute_automorphisms(m);
    std::sort(fast.begin(), fast.end());
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(fast, brute);
  }
  EXPECT_EQ(automorphisms(graph_Bn(1)).size(), 16u);
  EXPECT_EQ(automorphisms(graph_An(1)).size(), 128u);
  EXPECT_EQ(automorphisms(graph_model({"a", "b"}, {})).size(), 2u);
}

TEST(Automorphisms, RandomSmallGraphs) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 3 + i % 4;
    std::vector<std::string> names;
    for (std::size_t v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
    std::vector<std::pair<Element, Element>> edges;
    std::bernoulli_distribution keep(0.4);
    for (Element a = 0; a < n; ++a) {
      for (Element b = a + 1; b < n; ++b) {
        if (keep(rng)) edges.push_back({a, b});
      }
    }
    const Model m = graph_model(names, edges);
    auto fast = automorphisms(m);
    auto brute = oracle::brute_automorphisms(m);
    std::sort(fast.begin(), fast.end());
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(fast, brute);
  }
}

TEST(VertexTransitive, Examples) {
  EXPECT_TRUE(vertex_transitive(graph_An(1)));
  EXPECT_TRUE(vertex_transitive(graph_Bn(1)));
  EXPECT_FALSE(vertex_transitive(graph_model({"a", "b", "c"}, {{0, 1}, {1, 2}})));
}

TEST(Closure, Examples) {
  const Model a = graph_An(1);
  const Team single({"v"}, {{0}});
  EXPECT_EQ(closure(single, a).size(), 8u);
  EXPECT_TRUE(closure(Team({"v"}), a).empty());
}

TEST(Closure, IdempotentOnRandomTeams) {
  std::mt19937_64 rng(9);
  const Model b = graph_Bn(1);
  const auto perms = automorphisms(b);
  std::bernoulli_distribution keep(0.05);
  for (int i = 0; i < 50; ++i) {
    std::vector<Tuple> rows;
    for (Element x = 0; x < 8; ++x) {
      for (Element y = 0; y < 8; ++y) {
        if (keep(rng)) rows.push_back({x, y});
      }
    }
    const Team t({"x", "y"}, rows);
    const Team c = closure(t, perms);
    EXPECT_TRUE(closure(c, perms).same_assignments(c));
    EXPECT_TRUE(c.same_assignments(oracle::team_of(
        {"x", "y"}, oracle::close(oracle::rows_of(t), perms))));
  }
}

TEST(Flatten, Examples) {
  EXPECT_EQ(flatten(parse_formula("inc(x ; y) /\\ E(x,y)"), {"inc"}),
            parse_formula("top /\\ E(x,y)"));
  EXPECT_EQ(flatten(parse_formula("E(x,y)"), {"inc"}), parse_formula("E(x,y)"));
  // Hooks stay; only the atoms go.
  const Formula flat = flatten(nonconn_sentence(), {"inc", "const"});
  EXPECT_TRUE(dependency_counts(flat).empty());
  EXPECT_EQ(universal_count(flat), 1u);
}

TEST(Nonconn, Examples) {
  const Registry reg = builtin_registry();
  EXPECT_TRUE(eval(graph_An(1), Team::epsilon(), nonconn_sentence(), reg));
  EXPECT_FALSE(eval(graph_Bn(1), Team::epsilon(), nonconn_sentence(), reg));
  EXPECT_TRUE(eval(graph_model({"a", "b"}, {}), Team::epsilon(),
                   nonconn_sentence(), reg));
}

TEST(Connectivity, Examples) {
  EXPECT_FALSE(is_connected(graph_An(1)));
  EXPECT_TRUE(is_connected(graph_Bn(1)));
  EXPECT_TRUE(is_connected(graph_model({"a"}, {})));
  EXPECT_FALSE(is_connected(graph_An(2)));
  EXPECT_TRUE(is_connected(graph_Bn(2)));
}

TEST(Connectivity, AgreesWithOracleAndNonconnOnFiveVertices) {
  const Registry reg = builtin_registry();
  std::vector<std::pair<Element, Element>> pairs;
  for (Element i = 0; i < 5; ++i) {
    for (Element j = i + 1; j < 5; ++j) pairs.push_back({i, j});
  }
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); mask += 7) {
    std::vector<std::pair<Element, Element>> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (mask >> b & 1) edges.push_back(pairs[b]);
    }
    const Model g = graph_model({"a", "b", "c", "d", "e"}, edges);
    const bool c = oracle::connected(g);
    ASSERT_EQ(is_connected(g), c);
    ASSERT_EQ(eval(g, Team::epsilon(), nonconn_sentence(), reg), !c);
  }
}

}  // namespace
}  // namespace teamsem
