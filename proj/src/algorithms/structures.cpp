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

#include "bp/algorithms/structures.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "bp/graph/structure.hpp"

namespace bp {

std::map<VertexId, VertexId> ForestCover::tree_id() const {
  std::map<VertexId, VertexId> root;
  for (const auto& [v, p] : parent) {
    std::set<VertexId> seen{v};
    VertexId cur = v;
    bool cycle = false;
    while (true) {
      auto it = parent.find(cur);
      if (it == parent.end() || !it->second) break;
      const VertexId next = *it->second;
      if (!seen.insert(next).second) {
        cycle = true;
        break;
      }
      cur = next;
    }
    root[v] = cycle ? v : cur;
  }
  return root;
}

std::map<VertexId, std::optional<VertexId>> tree_orientation(const Graph& g) {
  if (!is_forest(g)) throw PreconditionError("tree orientation needs a forest");
  std::map<VertexId, std::optional<VertexId>> parent;
  std::vector<VertexId> roots;
  if (const auto& tree = g.metadata().tree; tree && g.contains(tree->root)) {
    roots.push_back(tree->root);
  }
  roots.insert(roots.end(), g.vertices().begin(), g.vertices().end());
  for (VertexId r : roots) {
    if (parent.contains(r)) continue;
    parent[r] = std::nullopt;
    std::deque<VertexId> queue{r};
    while (!queue.empty()) {
      const VertexId v = queue.front();
      queue.pop_front();
      for (VertexId u : g.neighbors(v)) {
        if (parent.contains(u)) continue;
        parent[u] = v;
        queue.push_back(u);
      }
    }
  }
  return parent;
}

BackupAssignment assignment_from(const congest::RunTranscript& t) {
  BackupAssignment a;
  for (const auto& [v, out] : t.outputs) {
    if (out.bp) a.selection[v] = *out.bp;
  }
  return a;
}

ForestCover forest_cover_from(const congest::RunTranscript& t) {
  ForestCover fc;
  for (const auto& [v, out] : t.outputs) fc.parent[v] = out.parent;
  return fc;
}

HPartition h_partition_from(const congest::RunTranscript& t, std::uint32_t a) {
  HPartition hp;
  hp.a = a;
  for (const auto& [v, out] : t.outputs) {
    if (!out.level) {
      throw ArboricityTooSmall("vertex " + std::to_string(v) +
                               " never dropped to active degree <= " +
                               std::to_string(3 * a) + "; a is below the arboricity");
    }
    hp.level[v] = *out.level;
    hp.ell = std::max(hp.ell, *out.level);
  }
  return hp;
}

}  // namespace bp
