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

#ifndef BP_HARNESS_EXPERIMENT_HPP_
#define BP_HARNESS_EXPERIMENT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bp/harness/harness.hpp"

namespace bp::harness {

struct AlgorithmSpec {
  std::string name;
  Params params;
  std::optional<std::uint32_t> max_rounds;  // overrides the engine setting
};

// One generator family swept over the cartesian product of its parameter
// lists and a seed range, crossed with a list of algorithms.
struct ExperimentSpec {
  std::string family;
  std::map<std::string, std::vector<std::string>> params;
  std::vector<std::uint64_t> seeds{1};
  std::vector<AlgorithmSpec> algorithms;
  congest::EngineConfig engine;
  // Optional columns: "wall_time_ms". Everything else is always recorded.
  std::vector<std::string> metrics;
  std::size_t flow_oracle_max_n = 2000;
  std::size_t brute_force_max_n = 8;
  std::string output;
};

// JSON layout:
//   {"generator": {"family": "udg",
//                  "params": {"n": [40, 80], "radius": 0.3, "side": 1},
//                  "seeds": [1, 50]},            // inclusive range or "list"
//    "algorithms": [{"name": "general-bp", "params": {}, "max_rounds": 10}],
//    "engine": {"max_rounds": 10000, "beta": 4},
//    "metrics": [], "oracle": {"flow_max_n": 2000, "brute_max_n": 8},
//    "output": "results.csv"}
// Throws ConfigError.
ExperimentSpec parse_experiment_spec(const std::string& json_text);

struct ResultRow {
  std::string graph_id;
  std::size_t n = 0;
  std::size_t m = 0;
  std::string algorithm;
  std::optional<std::uint32_t> rounds;
  std::optional<std::uint64_t> max_load;
  std::optional<std::uint64_t> t_star;
  std::optional<double> approx_ratio;
  std::optional<std::size_t> max_message_bits;
  std::optional<std::uint64_t> c_or_a;
  std::optional<double> wall_time_ms;
  std::string error;
};

// Rows sorted by (graph_id, algorithm). A failing cell becomes a row with
// only the error column filled.
std::vector<ResultRow> run_experiment(const ExperimentSpec& spec);

std::string rows_to_csv(const std::vector<ResultRow>& rows);

}  // namespace bp::harness

#endif  // BP_HARNESS_EXPERIMENT_HPP_
