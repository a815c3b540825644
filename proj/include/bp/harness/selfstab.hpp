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

#ifndef BP_HARNESS_SELFSTAB_HPP_
#define BP_HARNESS_SELFSTAB_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bp/congest/engine.hpp"
#include "bp/graph/graph.hpp"

namespace bp::harness {

// State sampled at a round boundary (after faults) is clean when the
// parent pointers form a forest cover, every non-isolated vertex's BP is a
// neighbor, and no vertex is selected more than 2c+1 times.
bool selfstab_clean(const Graph& g, const std::map<VertexId, congest::VertexOutput>& state,
                    std::size_t c);

struct FaultLatency {
  std::uint32_t round = 0;                 // 0 stands for the initial state
  std::optional<std::uint32_t> latency;    // nullopt: never clean before the
                                           // next fault or the end
  // A later fault struck before any clean sample; the clock restarts there.
  bool interrupted = false;
  // Samples taken between this fault and the next one (or the end).
  std::uint32_t window = 0;
};

struct SelfStabReport {
  std::size_t c = 0;
  std::uint32_t observed_rounds = 0;
  std::vector<bool> clean;                 // clean[r-1] for round r
  std::vector<FaultLatency> latencies;     // initial state first
  // From three rounds after the last fault (or its first clean sample, if
  // later) to the end, the Parent and BP maps never changed.
  bool fixed_point = false;
  std::uint64_t fingerprint = 0;
  // The last fault was followed by a clean sample and no earlier fault
  // failed to recover while it had samples to do so.
  bool stabilized() const;
};

// Runs self-stab for `observe_rounds` rounds under `faults`. c defaults to
// the exact neighborhood independence of g.
SelfStabReport run_selfstab(const Graph& g, const std::vector<congest::Fault>& faults,
                            std::uint32_t observe_rounds,
                            std::optional<std::size_t> c = std::nullopt,
                            std::uint32_t beta = 4);

std::string selfstab_report_to_json(const SelfStabReport& report);

}  // namespace bp::harness

#endif  // BP_HARNESS_SELFSTAB_HPP_
