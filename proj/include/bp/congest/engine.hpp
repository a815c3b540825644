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

#ifndef BP_CONGEST_ENGINE_HPP_
#define BP_CONGEST_ENGINE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bp/congest/program.hpp"
#include "bp/graph/graph.hpp"

namespace bp::congest {

// One entry of a fault plan: after the messages of `round` are delivered,
// overwrite `field` ("Parent", "BP" or "all") of `vertex` (every vertex when
// empty). `value` is a fixed ID, NULL, or drawn from `random_seed`.
struct Fault {
  enum class Value { kFixed, kNull, kRandom };

  std::uint32_t round = 1;
  std::optional<VertexId> vertex;
  std::string field = "all";
  Value kind = Value::kNull;
  VertexId fixed = 0;
  std::uint64_t random_seed = 0;

  bool operator==(const Fault&) const = default;
};

struct EngineConfig {
  std::uint32_t max_rounds = 10'000;
  // Per-edge per-round budget is beta * ceil(log2 n) + 8 bits.
  std::uint32_t beta = 4;
  std::vector<Fault> fault_plan;
  std::uint64_t seed = 0;
  // Keep a (round, vertex, sent digest, received digest) log.
  bool record_vertex_log = false;
};

std::size_t bit_budget(std::size_t n, std::uint32_t beta);

struct RoundStats {
  std::uint32_t round = 0;
  std::size_t messages = 0;
  std::size_t total_bits = 0;
  std::size_t max_bits = 0;
  bool operator==(const RoundStats&) const = default;
};

struct VertexLogEntry {
  std::uint32_t round = 0;
  VertexId vertex = 0;
  std::uint64_t sent_digest = 0;
  std::uint64_t received_digest = 0;
  bool operator==(const VertexLogEntry&) const = default;
};

struct RunTranscript {
  std::string program;
  std::uint32_t rounds_executed = 0;
  bool halted = false;
  std::map<VertexId, VertexOutput> outputs;
  std::size_t max_message_bits = 0;
  std::size_t bit_budget = 0;
  std::vector<RoundStats> per_round_bits;
  std::optional<std::vector<VertexLogEntry>> vertex_log;
  // FNV-1a over program name, every delivered message in (round, sender,
  // receiver) order, every applied fault, and the final outputs.
  std::uint64_t fingerprint = 0;
};

// Called at every round boundary, after delivery and fault application,
// with the outputs every vertex would report at that point.
using RoundObserver =
    std::function<void(std::uint32_t round, const std::map<VertexId, VertexOutput>&)>;

// Lockstep execution: in round r every running vertex steps on the messages
// sent in round r-1; round-r messages become readable in round r+1. Stops
// once every vertex has halted or after config.max_rounds rounds.
//
// Throws BudgetViolation, LocalityViolation, ConfigError (bad config or a
// fault plan the program cannot accept) and whatever program.validate()
// throws.
RunTranscript run(const Graph& g, const VertexProgram& program,
                  const EngineConfig& config, const RoundObserver& observer = {});

// As run(), hard-stopped after `round_limit` rounds; outputs reflect the
// partial states.
RunTranscript run_with_round_limit(const Graph& g, const VertexProgram& program,
                                   const EngineConfig& config,
                                   std::uint32_t round_limit,
                                   const RoundObserver& observer = {});

}  // namespace bp::congest

#endif  // BP_CONGEST_ENGINE_HPP_
