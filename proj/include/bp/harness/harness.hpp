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

#ifndef BP_HARNESS_HARNESS_HPP_
#define BP_HARNESS_HARNESS_HPP_

#include <cstdint>
#include <exception>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "bp/algorithms/registry.hpp"
#include "bp/algorithms/structures.hpp"
#include "bp/congest/engine.hpp"
#include "bp/graph/assignment.hpp"
#include "bp/graph/graph.hpp"

namespace bp::harness {

// Exit codes of the bpsim tool.
enum ExitCode : int {
  kExitClean = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitBudget = 3,
  kExitLocality = 4,
};

int exit_code_for(const std::exception& e);

// Generator parameters as strings, e.g. {"n": "40", "radius": "0.3"}.
using FamilyParams = std::map<std::string, std::string>;

std::vector<std::string> family_names();

// Dispatches to the generators. "line-graph" takes the line graph of the
// family named by "base" (default petersen), forwarding the other keys.
// "side" of udg and bdg defaults to 1. Any family accepts "relabel" (seed of
// a random ID permutation). Throws InvalidParameter on unknown families,
// unknown keys or missing keys.
Graph generate_family(const std::string& family, const FamilyParams& params,
                      std::uint64_t seed);

bool is_bipartite_algorithm(const std::string& algorithm);

// Vertices that must select: U for the bipartite programs, every
// non-isolated vertex otherwise.
std::set<VertexId> selection_domain(const Graph& g, const std::string& algorithm);

struct RunOutcome {
  congest::RunTranscript transcript;
  BackupAssignment assignment;  // restricted to the selection domain
  std::uint64_t max_load = 0;   // V-load for the bipartite programs
};

// Programs that never halt (self-stab) simply use up config.max_rounds.
RunOutcome run_algorithm(const Graph& g, const std::string& algorithm,
                         const Params& params, const congest::EngineConfig& config);

// Two-column text artifacts, one "v x" line per vertex, "-" for NULL. The
// h-partition file starts with "# a <a>".
std::string assignment_to_text(const congest::RunTranscript& t);
std::string forest_to_text(const congest::RunTranscript& t);
std::string h_partition_to_text(const HPartition& hp);

// Parsers for the artifacts above. Throw ParseError with a line number.
BackupAssignment assignment_from_text(const std::string& text);
ForestCover forest_from_text(const std::string& text);
HPartition h_partition_from_text(const std::string& text);

}  // namespace bp::harness

#endif  // BP_HARNESS_HARNESS_HPP_
