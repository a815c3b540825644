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

#include "bp/congest/serialize.hpp"
#include "bp/graph/graph_io.hpp"
#include "bp/graph/structure.hpp"
#include "bp/harness/experiment.hpp"
#include "bp/harness/harness.hpp"
#include "bp/harness/selfstab.hpp"
#include "bp/oracle/oracle.hpp"
#include "json.hpp"

namespace bp::harness {
namespace {

TEST(Families, Dispatch) {
  EXPECT_EQ(generate_family("cycle", {{"n", "6"}}, 1).num_edges(), 6u);
  EXPECT_EQ(generate_family("single-leaf-tree", {{"d", "3"}, {"h", "3"}}, 1).num_vertices(),
            22u);
  EXPECT_EQ(graph_to_string(generate_family("udg", {{"n", "40"}, {"radius", "0.3"}}, 1)),
            graph_to_string(generate_family("udg", {{"n", "40"}, {"radius", "0.3"}}, 1)));
  EXPECT_EQ(generate_family("line-graph", {}, 1).num_vertices(), 15u);
  EXPECT_EQ(generate_family("grid", {{"w", "3"}, {"h", "4"}}, 1).num_vertices(), 12u);
  EXPECT_THROW(generate_family("hypercube", {}, 1), InvalidParameter);
  EXPECT_THROW(generate_family("cycle", {}, 1), InvalidParameter);
  EXPECT_THROW(generate_family("cycle", {{"n", "6"}, {"k", "2"}}, 1), InvalidParameter);
  EXPECT_THROW(generate_family("cycle", {{"n", "six"}}, 1), InvalidParameter);
  const Graph r = generate_family("cycle", {{"n", "9"}, {"relabel", "3"}}, 1);
  EXPECT_EQ(r.num_edges(), 9u);
  EXPECT_NE(graph_to_string(r), graph_to_string(generate_family("cycle", {{"n", "9"}}, 1)));
  for (const auto& f : family_names()) EXPECT_FALSE(f.empty());
}

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(exit_code_for(BudgetViolation(1, 0, 1, 99, 20)), kExitBudget);
  EXPECT_EQ(exit_code_for(LocalityViolation(1, 0, 3)), kExitLocality);
  EXPECT_EQ(exit_code_for(PreconditionError("x")), kExitUsage);
  EXPECT_EQ(exit_code_for(ParseError(3, "x")), kExitUsage);
}

TEST(RunAlgorithm, DomainsAndLoads) {
  const Graph b = generate_family("bipartite", {{"m", "40"}, {"nv", "15"}, {"a", "2"}}, 3);
  EXPECT_TRUE(is_bipartite_algorithm("bipartite-parallel"));
  EXPECT_FALSE(is_bipartite_algorithm("general-bp"));
  const auto domain = selection_domain(b, "bipartite-parallel");
  EXPECT_EQ(domain.size(), 40u);
  const auto out = run_algorithm(b, "bipartite-parallel", {}, congest::EngineConfig{});
  EXPECT_EQ(out.assignment.selection.size(), 40u);
  EXPECT_EQ(out.max_load, evaluate_load(b, out.assignment).max_load);
  EXPECT_TRUE(verify_assignment(b, out.assignment, domain).valid);

  const Graph star = Graph::build(6, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  EXPECT_EQ(run_algorithm(star, "tree-bp", {}, congest::EngineConfig{}).max_load, 5u);

  congest::EngineConfig cap;
  cap.max_rounds = 7;
  const auto ss = run_algorithm(star, "self-stab", {}, cap);
  EXPECT_EQ(ss.transcript.rounds_executed, 7u);
  EXPECT_FALSE(ss.transcript.halted);
}

TEST(Artifacts, RoundTrip) {
  const Graph g = generate_family("forest-union", {{"n", "60"}, {"k", "2"}}, 2);
  const auto out = run_algorithm(g, "arboricity-bp", {{"a", "2"}}, congest::EngineConfig{});
  const std::string a_text = assignment_to_text(out.transcript);
  EXPECT_EQ(assignment_from_text(a_text), assignment_from(out.transcript));
  const HPartition hp = h_partition_from(out.transcript, 2);
  EXPECT_EQ(h_partition_from_text(h_partition_to_text(hp)), hp);

  const auto fc = run_algorithm(g, "forest-cover", {}, congest::EngineConfig{});
  EXPECT_EQ(forest_from_text(forest_to_text(fc.transcript)), forest_cover_from(fc.transcript));
  EXPECT_NE(forest_to_text(fc.transcript).find(" -\n"), std::string::npos);

  EXPECT_THROW(assignment_from_text("0 1\n0 2\n"), ParseError);
  EXPECT_THROW(assignment_from_text("0 1\nzero 2\n"), ParseError);
  try {
    forest_from_text("0 1\n1 -\n2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(h_partition_from_text("0 1\n"), ParseError);
}

ExperimentSpec small_spec() {
  return parse_experiment_spec(R"({
    "generator": {"family": "udg", "params": {"n": [30, 50], "radius": 0.3, "side": 1},
                  "seeds": [1, 3]},
    "algorithms": [{"name": "general-bp"}, {"name": "tree-bp"},
                   {"name": "arboricity-bp", "params": {"a": 4}}],
    "engine": {"max_rounds": 200},
    "output": "x.csv"})");
}

TEST(Experiment, DeterministicCsv) {
  const ExperimentSpec spec = small_spec();
  EXPECT_EQ(spec.seeds, (std::vector<std::uint64_t>{1, 2, 3}));
  const auto rows = run_experiment(spec);
  ASSERT_EQ(rows.size(), 2u * 3 * 3);
  const std::string csv = rows_to_csv(rows);
  EXPECT_EQ(csv, rows_to_csv(run_experiment(spec)));
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "graph_id,n,m,algorithm,rounds,max_load,t_star,approx_ratio,max_message_bits,"
            "c_or_a,wall_time_ms,error");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LE(std::tie(rows[i - 1].graph_id, rows[i - 1].algorithm),
              std::tie(rows[i].graph_id, rows[i].algorithm));
  }
  for (const auto& r : rows) {
    if (r.algorithm == "tree-bp") {
      // UDGs with cycles are no forests.
      if (!r.error.empty()) continue;
    }
    ASSERT_TRUE(r.error.empty()) << r.graph_id << " " << r.algorithm << ": " << r.error;
    ASSERT_TRUE(r.approx_ratio);
    EXPECT_GE(*r.approx_ratio, 1.0);
    EXPECT_LE(*r.rounds, 200u);
    if (r.algorithm == "general-bp") {
      EXPECT_LE(*r.max_load, 2 * *r.c_or_a + 1);
    }
  }
  EXPECT_EQ(rows.front().graph_id.rfind("udg[", 0), 0u);
}

TEST(Experiment, SpecErrors) {
  EXPECT_THROW(parse_experiment_spec("{"), ConfigError);
  EXPECT_THROW(parse_experiment_spec(R"({"algorithms": []})"), ConfigError);
  EXPECT_THROW(parse_experiment_spec(R"({
    "generator": {"family": "cycle", "params": {"n": 5}},
    "algorithms": [{"name": "general-bp"}], "metrics": ["energy"]})"),
               ConfigError);
}

TEST(Experiment, WallTimeIsOptIn) {
  auto spec = parse_experiment_spec(R"({
    "generator": {"family": "cycle", "params": {"n": 8}, "seeds": {"list": [4]}},
    "algorithms": [{"name": "general-bp"}], "metrics": ["wall_time_ms"]})");
  const auto rows = run_experiment(spec);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_TRUE(rows[0].wall_time_ms);
  EXPECT_EQ(rows[0].t_star, 1u);
  spec.metrics.clear();
  EXPECT_FALSE(run_experiment(spec)[0].wall_time_ms);
}

TEST(SelfStab, EmptyPlanCleanFromRoundThree) {
  const Graph g = generate_family("udg", {{"n", "80"}, {"radius", "0.2"}}, 5);
  const auto rep = run_selfstab(g, {}, 12);
  ASSERT_EQ(rep.clean.size(), 12u);
  for (std::size_t r = 3; r <= 12; ++r) EXPECT_TRUE(rep.clean[r - 1]) << r;
  EXPECT_TRUE(rep.stabilized());
  EXPECT_LE(*rep.latencies.front().latency, 3u);
  EXPECT_TRUE(rep.fixed_point);
}

TEST(SelfStab, RandomCorruptionRecovers) {
  const Graph g = generate_family("line-graph", {{"base", "gnp"}, {"n", "20"}, {"p", "0.2"}}, 2);
  std::vector<congest::Fault> plan;
  plan.push_back({10, std::nullopt, "all", congest::Fault::Value::kRandom, 0, 77});
  const auto rep = run_selfstab(g, plan, 25);
  ASSERT_EQ(rep.latencies.size(), 2u);
  EXPECT_EQ(rep.latencies[1].round, 10u);
  ASSERT_TRUE(rep.latencies[1].latency);
  EXPECT_LE(*rep.latencies[1].latency, 3u);
  EXPECT_TRUE(rep.fixed_point);
  const auto doc = nlohmann::json::parse(selfstab_report_to_json(rep));
  EXPECT_TRUE(doc["stabilized"].get<bool>());
}

TEST(SelfStab, CorruptionEveryRoundNeverSettles) {
  const Graph g = generate_family("cycle", {{"n", "12"}}, 1);
  std::vector<congest::Fault> plan;
  for (std::uint32_t r = 1; r <= 15; ++r) {
    plan.push_back({r, std::nullopt, "all", congest::Fault::Value::kRandom, 0, r});
  }
  const auto rep = run_selfstab(g, plan, 15);
  ASSERT_EQ(rep.latencies.size(), 16u);
  for (std::size_t i = 0; i + 1 < rep.latencies.size(); ++i) {
    EXPECT_TRUE(rep.latencies[i].interrupted);
    EXPECT_EQ(rep.latencies[i].window, 0u);
  }
  EXPECT_FALSE(rep.latencies.back().interrupted);
  EXPECT_FALSE(rep.latencies.back().latency);
  EXPECT_FALSE(rep.stabilized());
  EXPECT_FALSE(rep.fixed_point);
}

}  // namespace
}  // namespace bp::harness
