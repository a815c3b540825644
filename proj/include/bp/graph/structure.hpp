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

#ifndef BP_GRAPH_STRUCTURE_HPP_
#define BP_GRAPH_STRUCTURE_HPP_

#include <cstddef>
#include <cstdint>

#include "bp/graph/graph.hpp"

namespace bp {

inline constexpr std::uint64_t kDefaultIndependenceBudget = 50'000'000;

// Size of a maximum independent set in the subgraph induced by adj(v).
// Exact branch and bound; throws BudgetExceeded naming v once more than
// `node_budget` search nodes are expanded.
std::size_t local_independence(const Graph& g, VertexId v,
                               std::uint64_t node_budget =
                                   kDefaultIndependenceBudget);

// Neighborhood independence c(G): max over v of local_independence. 0 for an
// edgeless graph.
std::size_t neighborhood_independence(const Graph& g,
                                      std::uint64_t node_budget =
                                          kDefaultIndependenceBudget);

// Largest minimum degree seen while repeatedly deleting a min-degree vertex.
std::size_t degeneracy(const Graph& g);

bool is_forest(const Graph& g);

// Upper bound 11 * ceil(log2(rmax/rmin) + 1) on c(G) for bounded disk graphs.
std::size_t bdg_independence_bound(double rmin, double rmax);

}  // namespace bp

#endif  // BP_GRAPH_STRUCTURE_HPP_
