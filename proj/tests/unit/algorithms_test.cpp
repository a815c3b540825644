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

#include <set>

#include "bp/algorithms/programs.hpp"
#include "bp/algorithms/registry.hpp"
#include "bp/algorithms/structures.hpp"
#include "bp/congest/engine.hpp"
#include "bp/graph/generators.hpp"
#include "bp/graph/graph_io.hpp"
#include "bp/graph/structure.hpp"
#include "bp/oracle/oracle.hpp"

namespace bp {
namespace {

using congest::EngineConfig;
using congest::RunTranscript;

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (VertexId v = 1; v <= leaves; ++v) e.push_back({0, v});
  return Graph::build(leaves + 1, e);
}

Graph k3_123() {
  const std::vector<Edge> e{{1, 2}, {1, 3}, {2, 3}};
  return Graph::build(std::vector<VertexId>{1, 2, 3}, e);
}

std::set<VertexId> u_side(const Graph& g) {
  const auto& s = g.metadata().bipartite_sides->u;
  return {s.begin(), s.end()};
}

std::uint64_t v_load(const Graph& g, const RunTranscript& t) {
  BackupAssignment a;
  for (VertexId u : u_side(g)) {
    if (t.outputs.at(u).bp) a.selection[u] = *t.outputs.at(u).bp;
  }
  return evaluate_load(g, a).max_load;
}

std::uint64_t load(const Graph& g, const RunTranscript& t) {
  return evaluate_load(g, assignment_from(t)).max_load;
}

TEST(TreeBp, StarRootedAtCenter) {
  const Graph g = star(5);
  const auto t = run(g, TreeBp(tree_orientation(g)), EngineConfig{});
  EXPECT_EQ(t.rounds_executed, 2u);
  EXPECT_EQ(t.outputs.at(0).reported_load, 5u);
  EXPECT_EQ(t.outputs.at(0).bp, 1u);
  EXPECT_EQ(t.outputs.at(1).reported_load, 1u);
  for (VertexId v = 2; v <= 5; ++v) EXPECT_EQ(t.outputs.at(v).reported_load, 0u);
}

TEST(TreeBp, P2MutualSelection) {
  const std::vector<Edge> e{{0, 1}};
  const Graph g = Graph::build(2, e);
  const auto t = run(g, TreeBp(tree_orientation(g)), EngineConfig{});
  EXPECT_EQ(t.outputs.at(0).bp, 1u);
  EXPECT_EQ(t.outputs.at(1).bp, 0u);
  EXPECT_EQ(t.outputs.at(0).reported_load, 1u);
  EXPECT_EQ(t.outputs.at(1).reported_load, 1u);
}

TEST(TreeBp, IsolatedVertexIsFlagged) {
  const std::vector<Edge> e{{0, 1}};
  const Graph g = Graph::build(3, e);
  const auto t = run(g, TreeBp(tree_orientation(g)), EngineConfig{});
  EXPECT_FALSE(t.outputs.at(2).bp);
  EXPECT_EQ(t.outputs.at(2).aux.at("isolated"), 1);
}

TEST(TreeBp, RandomTreeWithinOnePlusOptimum) {
  const Graph g = generate_random_tree(50, 7);
  const auto t = run(g, TreeBp(tree_orientation(g)), EngineConfig{});
  EXPECT_LE(load(g, t), optimal_load(g).t_star + 1);
  // Reported loads agree with the evaluated ones.
  const auto profile = evaluate_load(g, assignment_from(t));
  for (const auto& [v, out] : t.outputs) EXPECT_EQ(out.reported_load, profile.load.at(v));
}

TEST(TreeBp, RejectsNonForestOrientation) {
  EXPECT_THROW(tree_orientation(generate_cycle(5)), PreconditionError);
  const Graph g = generate_random_tree(10, 1);
  auto parent = tree_orientation(g);
  parent.erase(parent.begin());
  EXPECT_THROW(run(g, TreeBp(parent), EngineConfig{}), PreconditionError);
}

TEST(OptimalTreeBp, ReachesTheOptimum) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = generate_random_tree(60, seed);
    const auto opt = optimal_load(g).t_star;
    const auto t = run(g, OptimalTreeBp(tree_orientation(g), opt), EngineConfig{});
    EXPECT_TRUE(t.halted);
    EXPECT_EQ(load(g, t), opt) << "seed " << seed;
    const auto profile = evaluate_load(g, assignment_from(t));
    for (const auto& [v, out] : t.outputs) EXPECT_EQ(out.reported_load, profile.load.at(v));
  }
}

TEST(OptimalTreeBp, RootLoadSeparatesTheTreePair) {
  for (std::size_t d : {2u, 3u}) {
    const Graph balanced = generate_balanced_tree(d, 3);
    const Graph single = generate_single_leaf_tree(d, 3);
    const auto a = run(balanced, OptimalTreeBp(tree_orientation(balanced), d), EngineConfig{});
    const auto b = run(single, OptimalTreeBp(tree_orientation(single), d), EngineConfig{});
    EXPECT_EQ(a.outputs.at(0).reported_load, d);
    EXPECT_EQ(b.outputs.at(0).reported_load, 0u);
  }
}

TEST(ForestCover, K3Example) {
  const Graph g = k3_123();
  const auto t = run(g, ForestCoverProgram{}, EngineConfig{});
  EXPECT_EQ(t.rounds_executed, 2u);
  EXPECT_EQ(t.outputs.at(1).parent, 2u);
  EXPECT_EQ(t.outputs.at(2).parent, 3u);
  EXPECT_FALSE(t.outputs.at(3).parent);
  EXPECT_TRUE(verify_forest_cover(g, forest_cover_from(t)).valid);
}

TEST(ForestCover, UnclaimedLocalMaxAdoptsClosestNeighbor) {
  // 5 is a local max nobody claims (3 prefers 4).
  const std::vector<Edge> e{{3, 4}, {3, 5}};
  const Graph g = Graph::build(std::vector<VertexId>{3, 4, 5}, e);
  const auto t = run(g, ForestCoverProgram{}, EngineConfig{});
  EXPECT_EQ(t.outputs.at(3).parent, 4u);
  EXPECT_FALSE(t.outputs.at(4).parent);
  EXPECT_EQ(t.outputs.at(5).parent, 3u);
  EXPECT_TRUE(verify_forest_cover(g, forest_cover_from(t)).valid);
}

TEST(ForestCover, ValidOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const Graph g = generate_gnp(5 + seed % 40, 0.15, seed);
    const auto t = run(g, ForestCoverProgram{}, EngineConfig{});
    const Report r = verify_forest_cover(g, forest_cover_from(t));
    ASSERT_TRUE(r.valid) << "seed " << seed << " " << report_to_json(r);
  }
}

TEST(ForestCover, IsolatedVertexIsCoverless) {
  const Graph g = Graph::build(1, std::vector<Edge>{});
  const auto t = run(g, ForestCoverProgram{}, EngineConfig{});
  EXPECT_EQ(t.outputs.at(0).aux.at("coverless"), 1);
  const Report r = verify_forest_cover(g, forest_cover_from(t));
  EXPECT_TRUE(r.valid);
  EXPECT_EQ(r.coverless, std::vector<VertexId>{0});
}

TEST(GeneralBp, K3Example) {
  const auto t = run(k3_123(), GeneralBp{}, EngineConfig{});
  EXPECT_EQ(t.outputs.at(1).bp, 2u);
  EXPECT_EQ(t.outputs.at(2).bp, 1u);
  EXPECT_EQ(t.outputs.at(3).bp, 2u);
  EXPECT_EQ(load(k3_123(), t), 2u);
  EXPECT_EQ(t.outputs.at(2).reported_load, 2u);
}

TEST(GeneralBp, SiblingRule) {
  // 2 and 4 hang below 6, 6 below the root 9.
  const std::vector<Edge> e{{2, 9}, {4, 9}, {6, 9}, {4, 6}, {2, 6}};
  const Graph g = Graph::build(std::vector<VertexId>{2, 4, 6, 9}, e);
  const auto t = run(g, GeneralBp{}, EngineConfig{});
  EXPECT_EQ(t.outputs.at(6).parent, 9u);
  EXPECT_EQ(t.outputs.at(4).parent, 6u);
  EXPECT_EQ(t.outputs.at(2).parent, 6u);
  // 2-4 is no edge, so neither leaf has a sibling to take.
  EXPECT_EQ(t.outputs.at(6).bp, 2u);
  EXPECT_EQ(t.outputs.at(4).bp, 6u);
  EXPECT_EQ(t.outputs.at(2).bp, 6u);
  EXPECT_EQ(t.outputs.at(9).bp, 6u);
}

TEST(GeneralBp, AdoptedLeafTakesSmallerSibling) {
  // 4 is an unclaimed local max and adopts 2, next to 2's child 1.
  const std::vector<Edge> e{{1, 2}, {1, 4}, {2, 3}, {2, 4}};
  const Graph g = Graph::build(std::vector<VertexId>{1, 2, 3, 4}, e);
  const auto t = run(g, GeneralBp{}, EngineConfig{});
  EXPECT_EQ(t.outputs.at(4).parent, 2u);
  EXPECT_EQ(t.outputs.at(1).parent, 2u);
  EXPECT_EQ(t.outputs.at(4).bp, 1u);
  EXPECT_EQ(t.outputs.at(1).bp, 2u);
  EXPECT_EQ(t.outputs.at(2).bp, 1u);
  EXPECT_EQ(t.outputs.at(3).bp, 2u);
}

TEST(GeneralBp, LineGraphOfPetersen) {
  const Graph g = line_graph(generate_petersen());
  const auto t = run(g, GeneralBp{}, EngineConfig{});
  EXPECT_LE(load(g, t), 5u);
  EXPECT_LE(t.rounds_executed, 5u);
}

TEST(GeneralBp, LoadDecomposition) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = generate_udg(120, 0.15, 1.0, seed);
    const auto t = run(g, GeneralBp{}, EngineConfig{});
    const std::size_t c = neighborhood_independence(g);
    const ForestCover fc = forest_cover_from(t);
    std::map<VertexId, std::size_t> from_child, from_sibling, from_parent;
    for (const auto& [v, out] : t.outputs) {
      if (!out.bp) continue;
      const VertexId w = *out.bp;
      if (fc.parent.at(v) == w) {
        ++from_child[w];
      } else if (fc.parent.at(w) == v) {
        ++from_parent[w];
      } else {
        ++from_sibling[w];
      }
    }
    for (const auto& [w, k] : from_child) EXPECT_LE(k, c);
    for (const auto& [w, k] : from_sibling) EXPECT_LE(k, c);
    for (const auto& [w, k] : from_parent) EXPECT_LE(k, 1u);
    EXPECT_LE(load(g, t), 2 * c + 1);
  }
}

TEST(GeneralBp, MessagesCarryAtMostTwoIds) {
  const Graph g = generate_udg(300, 0.1, 1.0, 3);
  const auto t = run(g, GeneralBp{}, EngineConfig{});
  EXPECT_LE(t.max_message_bits, 2u * g.id_bits() + 1 + congest::kTagBits);
}

Graph offer_example() {
  return load_graph(std::string(BP_DATA_DIR) + "/offer_example.txt");
}

TEST(Bipartite, OfferExampleKnownT) {
  const Graph g = offer_example();
  EXPECT_EQ(optimal_load_one_sided(g).t_star, 2u);
  BipartiteParams p;
  p.a = 2;
  p.t = 1;
  p.mode = BipartiteMode::kKnownT;
  const auto t = run(g, BipartiteBp(p, u_side(g)), EngineConfig{});
  EXPECT_TRUE(t.halted);
  EXPECT_LE(t.rounds_executed, 6u);
  for (VertexId u : u_side(g)) {
    ASSERT_TRUE(t.outputs.at(u).bp) << u;
    EXPECT_TRUE(g.has_edge(u, *t.outputs.at(u).bp));
  }
  EXPECT_LE(v_load(g, t), 4u);
  // Every V vertex selects its smallest U-neighbor.
  EXPECT_EQ(t.outputs.at(5).bp, 0u);
  EXPECT_EQ(t.outputs.at(7).bp, 4u);
}

TEST(Bipartite, DoublingMatchesKnownTWhenTIsOne) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = generate_bipartite(60, 60, 1, seed);
    if (optimal_load_one_sided(g).t_star != 1) continue;
    BipartiteParams known;
    known.a = 1;
    known.t = 1;
    known.mode = BipartiteMode::kKnownT;
    BipartiteParams doubling = known;
    doubling.t.reset();
    doubling.mode = BipartiteMode::kDoubling;
    const auto a = run(g, BipartiteBp(known, u_side(g)), EngineConfig{});
    const auto b = run(g, BipartiteBp(doubling, u_side(g)), EngineConfig{});
    EXPECT_EQ(assignment_from(a), assignment_from(b)) << seed;
  }
}

TEST(Bipartite, ParallelUsesInstanceZeroWhenTIsOne) {
  // Perfect matching: every V has one U-neighbor.
  std::vector<Edge> e;
  BipartiteSides sides;
  for (VertexId i = 0; i < 20; ++i) {
    e.push_back({i, i + 20});
    sides.u.push_back(i);
    sides.v.push_back(i + 20);
  }
  GraphMetadata meta;
  meta.bipartite_sides = sides;
  const Graph g = Graph::build(40, e, meta);
  EXPECT_EQ(optimal_load_one_sided(g).t_star, 1u);
  BipartiteParams p;
  p.a = 1;
  const auto t = run(g, BipartiteBp(p, u_side(g)), EngineConfig{});
  for (VertexId u : u_side(g)) {
    EXPECT_EQ(t.outputs.at(u).aux.at("instance"), 0);
    EXPECT_EQ(t.outputs.at(u).bp, u + 20);
  }
}

TEST(Bipartite, ParallelLoadBound) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = generate_bipartite(200, 50, 3, seed);
    const auto opt = optimal_load_one_sided(g).t_star;
    BipartiteParams p;
    p.a = 3;
    const auto t = run(g, BipartiteBp(p, u_side(g)), EngineConfig{});
    EXPECT_LE(v_load(g, t), 8 * 3 * opt);
    EXPECT_LE(t.rounds_executed, 2 * (ceil_log2(g.num_vertices()) + 1));
    EXPECT_LE(t.max_message_bits, ceil_log2(g.num_vertices()) + 8);
  }
}

TEST(Bipartite, DoublingAllMatched) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = generate_bipartite(150, 40, 4, seed);
    const auto opt = optimal_load_one_sided(g).t_star;
    BipartiteParams p;
    p.a = 4;
    p.mode = BipartiteMode::kDoubling;
    const auto t = run(g, BipartiteBp(p, u_side(g)), EngineConfig{});
    for (VertexId u : u_side(g)) EXPECT_TRUE(t.outputs.at(u).bp) << u;
    EXPECT_LE(v_load(g, t), 8 * 4 * opt);
    const std::uint32_t log_n = ceil_log2(g.num_vertices());
    EXPECT_LE(t.rounds_executed, 2 * (log_n + 1) * (ceil_log2(opt) + 1));
  }
}

TEST(Bipartite, Preconditions) {
  const Graph g = offer_example();
  BipartiteParams p;
  p.a = 1;  // U-degree 2 exceeds a
  EXPECT_THROW(run(g, BipartiteBp(p, u_side(g)), EngineConfig{}), PreconditionError);
  p.a = 2;
  p.mode = BipartiteMode::kKnownT;
  EXPECT_THROW(run(g, BipartiteBp(p, u_side(g)), EngineConfig{}), InvalidParameter);
  p.mode = BipartiteMode::kParallel;
  EXPECT_THROW(run(generate_cycle(5), BipartiteBp(p, {0, 2}), EngineConfig{}),
               PreconditionError);
  EXPECT_THROW(make_program("bipartite-parallel", generate_cycle(6)), PreconditionError);
}

TEST(Partition, StarK110) {
  const Graph g = star(10);
  const auto t = run(g, ProcedurePartition(1, 0), EngineConfig{});
  const HPartition hp = h_partition_from(t, 1);
  for (VertexId v = 1; v <= 10; ++v) EXPECT_EQ(hp.level.at(v), 1u);
  EXPECT_EQ(hp.level.at(0), 2u);
  EXPECT_EQ(hp.ell, 2u);
  EXPECT_TRUE(verify_h_partition(g, hp).valid);
}

TEST(Partition, ForestUnions) {
  for (std::size_t k : {1u, 2u, 3u}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const Graph g = generate_forest_union(100, k, seed);
      const auto t = run(g, ProcedurePartition(k, 0), EngineConfig{});
      const HPartition hp = h_partition_from(t, static_cast<std::uint32_t>(k));
      EXPECT_TRUE(verify_h_partition(g, hp).valid);
      EXPECT_LE(hp.ell, 15u);
    }
  }
}

TEST(Partition, ArboricityTooSmall) {
  // K7 has arboricity 4; a = 1 gives threshold 3 < degree 6.
  std::vector<Edge> e;
  for (VertexId u = 0; u < 7; ++u) {
    for (VertexId v = u + 1; v < 7; ++v) e.push_back({u, v});
  }
  const Graph g = Graph::build(7, e);
  const auto t = run(g, ProcedurePartition(1, 0), EngineConfig{});
  EXPECT_EQ(t.outputs.at(0).aux.at("stranded"), 1);
  EXPECT_THROW(h_partition_from(t, 1), ArboricityTooSmall);
}

TEST(ArboricityBp, C6StaysInsideH1) {
  const Graph g = generate_cycle(6);
  BipartiteParams p;
  p.a = 2;
  const auto t = run(g, ArboricityBp(p), EngineConfig{});
  for (const auto& [v, out] : t.outputs) {
    EXPECT_EQ(out.level, 1u);
    EXPECT_EQ(out.aux.at("role"), 0);
    ASSERT_TRUE(out.bp);
    EXPECT_TRUE(g.has_edge(v, *out.bp));
    EXPECT_EQ(out.bp, v == 0 ? 1u : (v == 5 ? 0u : std::min<VertexId>(v - 1, v + 1)));
  }
}

TEST(ArboricityBp, GridAndTrees) {
  const Graph grid = generate_grid(10, 10);
  BipartiteParams p;
  p.a = 3;
  const auto t = run(grid, ArboricityBp(p), EngineConfig{});
  EXPECT_TRUE(t.halted);
  EXPECT_LE(load(grid, t), 27 * 3 * optimal_load(grid).t_star);
  EXPECT_TRUE(verify_assignment(grid, assignment_from(t),
                                {grid.vertices().begin(), grid.vertices().end()})
                  .valid);
  EXPECT_TRUE(verify_h_partition(grid, h_partition_from(t, 3)).valid);
  EXPECT_LE(t.rounds_executed, 2 * ceil_log2(grid.num_vertices()) + 4);

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph tree = generate_random_tree(200, seed);
    p.a = 1;
    const auto r = run(tree, ArboricityBp(p), EngineConfig{});
    EXPECT_LE(load(tree, r), 27 * optimal_load(tree).t_star);
  }
}

TEST(ArboricityBp, RejectsDoubling) {
  BipartiteParams p;
  p.mode = BipartiteMode::kDoubling;
  EXPECT_THROW(run(generate_cycle(6), ArboricityBp(p), EngineConfig{}), InvalidParameter);
}

TEST(SelfStab, CleanAfterThreeRoundsFromNull) {
  const Graph g = generate_udg(100, 0.2, 1.0, 4);
  EngineConfig config;
  config.max_rounds = 3;
  const auto t = run(g, SelfStabBp{}, config);
  EXPECT_FALSE(t.halted);
  EXPECT_TRUE(verify_forest_cover(g, forest_cover_from(t)).valid);
  EXPECT_LE(load(g, t), 2 * neighborhood_independence(g) + 1);

  // Matches the static two-phase construction.
  const auto fc = run(g, ForestCoverProgram{}, EngineConfig{});
  EXPECT_EQ(forest_cover_from(t), forest_cover_from(fc));
}

TEST(Registry, NamesAndParams) {
  const Graph tree = generate_random_tree(20, 1);
  for (const std::string& name : program_names()) {
    EXPECT_FALSE(name.empty());
  }
  EXPECT_EQ(make_program("tree-bp", tree)->name(), "tree-bp");
  EXPECT_THROW(make_program("optimal-tree-bp", tree), InvalidParameter);
  EXPECT_EQ(make_program("optimal-tree-bp", tree, {{"t", "2"}})->name(), "optimal-tree-bp");
  EXPECT_THROW(make_program("no-such", tree), InvalidParameter);
  EXPECT_THROW(make_program("general-bp", tree, {{"colour", "1"}}), InvalidParameter);
  EXPECT_NO_THROW(make_program("general-bp", tree, {{"seed", "1"}}));
  EXPECT_THROW(make_program("arboricity-bp", tree, {{"a", "x"}}), InvalidParameter);
  EXPECT_EQ(make_program("self-stab", tree)->name(), "self-stab");
  const Graph b = generate_bipartite(10, 5, 2, 1);
  EXPECT_EQ(make_program("bipartite-known", b, {{"t", "3"}})->name(), "bipartite-known");
  EXPECT_THROW(make_program("bipartite-known", b), InvalidParameter);
}

}  // namespace
}  // namespace bp
