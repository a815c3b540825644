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

#include <cmath>
#include <set>

#include "bp/graph/generators.hpp"
#include "bp/graph/graph_io.hpp"
#include "bp/graph/structure.hpp"

namespace bp {
namespace {

TEST(Graph, RejectsSelfLoopsDuplicatesAndUnknownEndpoints) {
  const std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Graph::build(3, loop), InvalidInput);
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  EXPECT_THROW(Graph::build(3, dup), InvalidInput);
  const std::vector<Edge> unknown{{0, 7}};
  EXPECT_THROW(Graph::build(3, unknown), InvalidInput);
  EXPECT_THROW(Graph::build({4, 4}, {}), InvalidInput);
}

TEST(Graph, SparseIdsAndSymmetricAdjacency) {
  const std::vector<Edge> edges{{10, 3}, {3, 42}};
  const Graph g = Graph::build({42, 3, 10}, edges);
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_TRUE(g.has_edge(3, 10));
  EXPECT_TRUE(g.has_edge(10, 3));
  EXPECT_FALSE(g.has_edge(10, 42));
  EXPECT_EQ(std::vector<VertexId>(g.neighbors(3).begin(), g.neighbors(3).end()),
            (std::vector<VertexId>{10, 42}));
  EXPECT_EQ(g.id_bits(), 6u);
  EXPECT_FALSE(g.dense_ids());
}

TEST(Graph, BipartiteSidesMustCrossEveryEdge) {
  GraphMetadata meta;
  meta.bipartite_sides = BipartiteSides{{0, 1}, {2}};
  const std::vector<Edge> ok{{0, 2}, {1, 2}};
  EXPECT_NO_THROW(Graph::build(3, ok, meta));
  const std::vector<Edge> inside{{0, 1}, {1, 2}};
  EXPECT_THROW(Graph::build(3, inside, meta), InvalidInput);
}

TEST(Generators, Cycle) {
  const Graph c6 = generate_cycle(6);
  EXPECT_EQ(c6.num_vertices(), 6u);
  EXPECT_EQ(c6.num_edges(), 6u);
  for (VertexId v : c6.vertices()) EXPECT_EQ(c6.degree(v), 2u);
  EXPECT_EQ(c6.metadata().declared_arboricity, 2u);

  const Graph k3 = generate_cycle(3);
  EXPECT_EQ(k3.num_edges(), 3u);
  EXPECT_TRUE(k3.has_edge(0, 2));
  EXPECT_THROW(generate_cycle(2), InvalidParameter);
}

TEST(Generators, BalancedTree) {
  const Graph star = generate_balanced_tree(3, 1);
  EXPECT_EQ(star.num_vertices(), 4u);
  EXPECT_EQ(star.degree(0), 3u);

  const Graph t = generate_balanced_tree(3, 3);
  EXPECT_EQ(t.num_vertices(), 40u);
  EXPECT_EQ(t.num_edges(), 39u);
  ASSERT_TRUE(t.metadata().tree);
  EXPECT_EQ(t.metadata().tree->root, 0u);
  EXPECT_EQ(t.metadata().tree->level.at(39), 3u);
  EXPECT_EQ(t.metadata().declared_arboricity, 1u);
  EXPECT_THROW(generate_balanced_tree(1, 3), InvalidParameter);
  EXPECT_THROW(generate_balanced_tree(10, 10, 1000), InvalidParameter);
}

TEST(Generators, SingleLeafTree) {
  const Graph t = generate_single_leaf_tree(3, 3);
  // balanced(3, 2) has 13 vertices; each of its 9 deepest gets one leaf.
  EXPECT_EQ(t.num_vertices(), 22u);
  for (VertexId v = 4; v <= 12; ++v) {
    EXPECT_EQ(t.metadata().tree->level.at(v), 2u);
    EXPECT_EQ(t.degree(v), 2u) << "depth-2 vertex " << v << " has one child";
  }
  const Graph small = generate_single_leaf_tree(2, 2);
  EXPECT_EQ(small.num_vertices(), 5u);
  EXPECT_THROW(generate_single_leaf_tree(3, 1), InvalidParameter);
}

// Both trees agree on IDs and edges within distance h-1 of the root.
TEST(Generators, TreePairSharesPrefix) {
  for (std::size_t d : {2, 3, 4}) {
    for (std::size_t h : {2, 3, 4}) {
      const Graph a = generate_balanced_tree(d, h);
      const Graph b = generate_single_leaf_tree(d, h);
      const auto& la = a.metadata().tree->level;
      const auto& lb = b.metadata().tree->level;
      for (const auto& [v, l] : la) {
        if (l > h - 1) continue;
        ASSERT_TRUE(lb.contains(v));
        EXPECT_EQ(lb.at(v), l);
        for (VertexId u : a.neighbors(v)) {
          if (la.at(u) <= h - 1) {
            EXPECT_TRUE(b.has_edge(u, v));
          }
        }
      }
      for (const auto& [v, l] : lb) {
        if (l <= h - 1) {
          EXPECT_TRUE(la.contains(v) && la.at(v) == l);
        }
      }
    }
  }
}

TEST(Generators, RandomTree) {
  EXPECT_EQ(generate_random_tree(1, 3).num_edges(), 0u);
  const Graph two = generate_random_tree(2, 3);
  EXPECT_EQ(two.num_edges(), 1u);
  const Graph a = generate_random_tree(50, 7);
  const Graph b = generate_random_tree(50, 7);
  EXPECT_EQ(graph_to_string(a), graph_to_string(b));
  EXPECT_TRUE(is_forest(a));
  EXPECT_EQ(a.num_edges(), 49u);
  EXPECT_NE(graph_to_string(a), graph_to_string(generate_random_tree(50, 8)));
}

TEST(Generators, UdgClosedThresholdAndDeterminism) {
  const Graph a = generate_udg(40, 0.3, 1.0, 1);
  const Graph b = generate_udg(40, 0.3, 1.0, 1);
  EXPECT_EQ(graph_to_string(a), graph_to_string(b));
  const auto& geo = *a.metadata().geometry;
  for (VertexId u : a.vertices()) {
    for (VertexId v : a.vertices()) {
      if (u >= v) continue;
      const double dx = geo.at(u).x - geo.at(v).x, dy = geo.at(u).y - geo.at(v).y;
      EXPECT_EQ(a.has_edge(u, v), dx * dx + dy * dy <= 0.3 * 0.3);
    }
  }
  EXPECT_THROW(generate_udg(5, 0.0, 1.0, 1), InvalidParameter);
}

TEST(Generators, DegenerateBdgIsUdg) {
  for (std::uint64_t seed : {1, 2, 3}) {
    const Graph u = generate_udg(60, 0.2, 1.0, seed);
    const Graph b = generate_bdg(60, 0.2, 0.2, 1.0, seed);
    EXPECT_EQ(u.edges(), b.edges());
  }
  EXPECT_THROW(generate_bdg(10, 0.4, 0.1, 1.0, 1), InvalidParameter);
}

TEST(Generators, LineGraph) {
  const std::vector<Edge> p3{{0, 1}, {1, 2}};
  const Graph l = line_graph(Graph::build(3, p3));
  EXPECT_EQ(l.num_vertices(), 2u);
  EXPECT_EQ(l.num_edges(), 1u);
  const Graph k3 = line_graph(generate_cycle(3));
  EXPECT_EQ(k3.num_vertices(), 3u);
  EXPECT_EQ(k3.num_edges(), 3u);
  EXPECT_THROW(line_graph(Graph::build(2, {})), InvalidInput);
  const Graph lp = line_graph(generate_petersen());
  EXPECT_EQ(lp.num_vertices(), 15u);
  EXPECT_EQ(lp.num_edges(), 30u);
}

TEST(Generators, Bipartite) {
  const Graph one = generate_bipartite(20, 5, 1, 4);
  const auto& sides = *one.metadata().bipartite_sides;
  for (VertexId u : sides.u) EXPECT_EQ(one.degree(u), 1u);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = generate_bipartite(30, 10, 3, seed);
    for (VertexId u : g.metadata().bipartite_sides->u) {
      EXPECT_GE(g.degree(u), 1u);
      EXPECT_LE(g.degree(u), 3u);
    }
  }
}

TEST(Generators, ForestUnion) {
  EXPECT_TRUE(is_forest(generate_forest_union(40, 1, 3)));
  for (std::size_t k : {1, 2, 3, 4}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Graph g = generate_forest_union(80, k, seed);
      EXPECT_LE(degeneracy(g), 2 * k - 1);
      EXPECT_EQ(g.metadata().declared_arboricity, k);
    }
  }
}

TEST(Generators, Grid) {
  const Graph path = generate_grid(1, 7);
  EXPECT_EQ(path.num_edges(), 6u);
  EXPECT_EQ(path.max_degree(), 2u);
  const Graph c4 = generate_grid(2, 2);
  EXPECT_EQ(c4.num_edges(), 4u);
  for (VertexId v : c4.vertices()) EXPECT_EQ(c4.degree(v), 2u);
  EXPECT_EQ(generate_grid(10, 10).metadata().declared_arboricity, 3u);
}

TEST(Generators, RelabelKeepsStructure) {
  const Graph g = generate_balanced_tree(2, 3);
  const Graph r = relabel_random(g, 9);
  EXPECT_EQ(r.num_edges(), g.num_edges());
  EXPECT_EQ(degeneracy(r), degeneracy(g));
  ASSERT_TRUE(r.metadata().tree);
  EXPECT_EQ(r.metadata().tree->level.at(r.metadata().tree->root), 0u);
  EXPECT_EQ(graph_to_string(r), graph_to_string(relabel_random(g, 9)));
}

TEST(Generators, DeclaredArboricityBoundsDegeneracy) {
  const std::vector<Graph> graphs{generate_cycle(9), generate_balanced_tree(3, 3),
                                  generate_random_tree(70, 1), generate_grid(6, 9),
                                  generate_forest_union(50, 3, 2)};
  for (const Graph& g : graphs) {
    ASSERT_TRUE(g.metadata().declared_arboricity);
    EXPECT_LE(degeneracy(g), 2 * *g.metadata().declared_arboricity - 1);
  }
}

}  // namespace
}  // namespace bp
