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

#ifndef BP_ORACLE_ORACLE_HPP_
#define BP_ORACLE_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bp/algorithms/structures.hpp"
#include "bp/graph/assignment.hpp"
#include "bp/graph/graph.hpp"

namespace bp {

enum class OracleMode { kFull, kOneSided };

struct OracleResult {
  std::uint64_t t_star = 0;
  BackupAssignment witness;
  OracleMode mode = OracleMode::kFull;
};

// Smallest t such that every vertex can select a neighbor with no vertex
// selected more than t times. Binary search over t in [1, max degree], each
// probe a max-flow; the answer is re-checked infeasible at t_star - 1.
// Throws NoValidSelection for an isolated vertex, InvalidInput on an empty
// graph.
OracleResult optimal_load(const Graph& g);

// Only U (from the metadata) selects; load counts on V.
// Throws InvalidInput without sides, PreconditionError if an edge stays
// inside a side, NoValidSelection for an isolated U-vertex.
OracleResult optimal_load_one_sided(const Graph& g);

inline constexpr std::uint64_t kDefaultBruteForceBudget = 50'000'000;

// Exhaustive search over every combination of selections. Refuses with
// BudgetExceeded when the product of degrees exceeds `budget`.
std::uint64_t brute_force_optimal_load(const Graph& g,
                                       std::uint64_t budget = kDefaultBruteForceBudget);

// Throws InvalidAssignment when a selector is unknown or picks a
// non-neighbor.
LoadProfile evaluate_load(const Graph& g, const BackupAssignment& assignment);

struct Violation {
  VertexId vertex = 0;
  std::string rule;
  std::string detail;
  bool operator==(const Violation&) const = default;
};

struct Report {
  bool valid = true;
  std::vector<Violation> violations;
  // Isolated vertices, which no forest cover can touch. Not violations.
  std::vector<VertexId> coverless;

  void add(VertexId v, std::string rule, std::string detail);
};

std::string report_to_json(const Report& report);

// Rules: unknown-vertex, missing, non-edge, cycle, uncovered.
Report verify_forest_cover(const Graph& g, const ForestCover& fc);

// Rules: missing, level-range, upper-degree, no-lower-neighbor, level-count.
Report verify_h_partition(const Graph& g, const HPartition& hp);

// Rules: unknown-vertex, non-edge, missing (a vertex of `domain` without a
// selection), outside-domain.
Report verify_assignment(const Graph& g, const BackupAssignment& assignment,
                         const std::set<VertexId>& domain);

}  // namespace bp

#endif  // BP_ORACLE_ORACLE_HPP_
