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

#ifndef BP_GRAPH_ASSIGNMENT_HPP_
#define BP_GRAPH_ASSIGNMENT_HPP_

#include <cstdint>
#include <map>

#include "bp/errors.hpp"

namespace bp {

// v -> the neighbor v selected as its backup.
struct BackupAssignment {
  std::map<VertexId, VertexId> selection;
  bool operator==(const BackupAssignment&) const = default;
};

// Selector counts. Every vertex of the graph appears, loads of zero included.
struct LoadProfile {
  std::map<VertexId, std::uint64_t> load;
  std::uint64_t max_load = 0;
  bool operator==(const LoadProfile&) const = default;
};

}  // namespace bp

#endif  // BP_GRAPH_ASSIGNMENT_HPP_
