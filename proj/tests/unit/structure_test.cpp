// Copyright 2026 The bpsim Authors
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

#include "bp/graph/generators.hpp"
#include "bp/graph/structure.hpp"

namespace bp {
namespace {

Graph star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (VertexId i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph::build(leaves + 1, edges);
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::build(n, edges);
}

// Exhaustive subset scan; independent of the branch and bound.
std::size_t slow_local_independence(const Graph& g, VertexId v) {
  const auto nb = g.neighbors(v);
  const std::size_t k = nb.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      if (!((mask >> i) & 1)) continue;
      for (std::size_t j = i + 1; j < k && ok; ++j) {
        if (((mask >> j) & 1) && g.has_edge(nb[i], nb[j])) ok = false;
      }
    }
    if (ok) best = std::max<std::size_t>(best, __builtin_popcountll(mask));
  }
  return best;
}

TEST(NeighborhoodIndependence, SmallCases) {
  EXPECT_EQ(neighborhood_independence(generate_cycle(3)), 1u);
  EXPECT_EQ(neighborhood_independence(star(5)), 5u);
  EXPECT_EQ(local_independence(star(5), 0), 5u);
  EXPECT_EQ(local_independence(star(5), 1), 1u);
  EXPECT_EQ(neighborhood_independence(complete(6)), 1u);
  EXPECT_EQ(neighborhood_independence(Graph::build(1, {})), 0u);
  EXPECT_EQ(neighborhood_independence(generate_petersen()), 3u);
}

TEST(NeighborhoodIndependence, LineGraphsAtMostTwo) {
  EXPECT_EQ(neighborhood_independence(line_graph(generate_petersen())), 2u);
  EXPECT_EQ(neighborhood_independence(line_graph(star(4))), 1u);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph l = line_graph(generate_gnp(25, 0.2, seed));
    EXPECT_LE(neighborhood_independence(l), 2u);
  }
  // A degree-3 vertex with a pendant path makes 2 exact.
  const std::vector<Edge> spider{{0, 1}, {0, 2}, {0, 3}, {1, 4}};
  EXPECT_EQ(neighborhood_independence(line_graph(Graph::build(5, spider))), 2u);
}

TEST(NeighborhoodIndependence, FrozenGeometricValues) {
  // Cross-checked with an external clique solver on the complement of each
  // neighborhood.
  EXPECT_EQ(neighborhood_independence(generate_udg(40, 0.3, 1.0, 1)), 4u);
  EXPECT_EQ(neighborhood_independence(generate_bdg(40, 0.1, 0.4, 1.0, 2)), 4u);
}

TEST(NeighborhoodIndependence, GeometricBounds) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    EXPECT_LE(neighborhood_independence(generate_udg(150, 0.15, 1.0, seed)), 5u);
    EXPECT_LE(neighborhood_independence(generate_bdg(150, 0.05, 0.3, 1.0, seed)),
              bdg_independence_bound(0.05, 0.3));
  }
  EXPECT_EQ(bdg_independence_bound(1.0, 1.0), 11u);
  EXPECT_EQ(bdg_independence_bound(0.1, 0.4), 33u);
}

TEST(NeighborhoodIndependence, MatchesExhaustiveScan) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = generate_gnp(18, 0.35, seed);
    for (VertexId v : g.vertices()) {
      ASSERT_EQ(local_independence(g, v), slow_local_independence(g, v))
          << "seed " << seed << " vertex " << v;
    }
  }
}

TEST(NeighborhoodIndependence, BudgetNamesVertex) {
  const Graph g = generate_gnp(120, 0.5, 3);
  try {
    neighborhood_independence(g, 5);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_TRUE(g.contains(e.vertex()));
  }
}

TEST(Degeneracy, SmallCases) {
  EXPECT_EQ(degeneracy(generate_random_tree(30, 2)), 1u);
  EXPECT_EQ(degeneracy(generate_cycle(6)), 2u);
  EXPECT_EQ(degeneracy(complete(4)), 3u);
  EXPECT_EQ(degeneracy(generate_grid(10, 10)), 2u);
  EXPECT_EQ(degeneracy(Graph::build(3, {})), 0u);
}

TEST(Degeneracy, FrozenForestUnion) {
  // Cross-checked with an external core-number computation.
  EXPECT_EQ(degeneracy(generate_forest_union(60, 3, 5)), 4u);
}

TEST(IsForest, Basics) {
  EXPECT_TRUE(is_forest(Graph::build(4, {})));
  EXPECT_TRUE(is_forest(generate_balanced_tree(2, 4)));
  EXPECT_FALSE(is_forest(generate_cycle(5)));
}

}  // namespace
}  // namespace bp
