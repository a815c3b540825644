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

#ifndef BP_ALGORITHMS_STRUCTURES_HPP_
#define BP_ALGORITHMS_STRUCTURES_HPP_

#include <cstdint>
#include <map>
#include <optional>

#include "bp/congest/engine.hpp"
#include "bp/graph/assignment.hpp"
#include "bp/graph/graph.hpp"

namespace bp {

// Parent pointers of vertex-disjoint trees; roots map to nullopt.
struct ForestCover {
  std::map<VertexId, std::optional<VertexId>> parent;
  bool operator==(const ForestCover&) const = default;

  // Root of the tree containing each vertex. Follows pointers only while
  // they stay inside the map and do not revisit a vertex; a vertex on a
  // cycle maps to itself.
  std::map<VertexId, VertexId> tree_id() const;
};

struct HPartition {
  std::map<VertexId, std::uint32_t> level;  // 1-based
  std::uint32_t ell = 0;                    // number of non-empty levels used
  std::uint32_t a = 1;
  bool operator==(const HPartition&) const = default;
};

// The orientation tree_bp expects: every component is rooted at the recorded
// tree root when the graph carries one, at its smallest ID otherwise.
// Throws PreconditionError when g is not a forest.
std::map<VertexId, std::optional<VertexId>> tree_orientation(const Graph& g);

// bp of every vertex that reported one.
BackupAssignment assignment_from(const congest::RunTranscript& t);

// The `parent` field of every vertex.
ForestCover forest_cover_from(const congest::RunTranscript& t);

// The `level` field of every vertex. Throws ArboricityTooSmall naming a
// vertex that never joined a level.
HPartition h_partition_from(const congest::RunTranscript& t, std::uint32_t a);

}  // namespace bp

#endif  // BP_ALGORITHMS_STRUCTURES_HPP_
