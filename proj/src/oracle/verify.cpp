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

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "bp/oracle/oracle.hpp"
#include "json.hpp"

namespace bp {

void Report::add(VertexId v, std::string rule, std::string detail) {
  valid = false;
  violations.push_back({v, std::move(rule), std::move(detail)});
}

std::string report_to_json(const Report& report) {
  nlohmann::json doc;
  doc["valid"] = report.valid;
  doc["violations"] = nlohmann::json::array();
  for (const Violation& v : report.violations) {
    doc["violations"].push_back(
        {{"vertex", v.vertex}, {"rule", v.rule}, {"detail", v.detail}});
  }
  doc["coverless"] = report.coverless;
  return doc.dump(2) + "\n";
}

Report verify_forest_cover(const Graph& g, const ForestCover& fc) {
  Report r;
  std::map<VertexId, std::size_t> children;
  for (const auto& [v, p] : fc.parent) {
    if (!g.contains(v)) {
      r.add(v, "unknown-vertex", "not a vertex of the graph");
      continue;
    }
    if (!p) continue;
    if (!g.has_edge(v, *p)) {
      r.add(v, "non-edge", "parent " + std::to_string(*p) + " is not a neighbor");
      continue;
    }
    ++children[*p];
  }

  // Walk parent pointers; states: 0 unvisited, 1 on the current path, 2 done.
  std::map<VertexId, int> state;
  std::set<VertexId> on_cycle;
  for (VertexId start : g.vertices()) {
    if (state[start] != 0) continue;
    std::vector<VertexId> path;
    VertexId cur = start;
    while (true) {
      if (state[cur] == 2) break;
      if (state[cur] == 1) {
        auto it = std::find(path.begin(), path.end(), cur);
        on_cycle.insert(it, path.end());
        break;
      }
      state[cur] = 1;
      path.push_back(cur);
      auto p = fc.parent.find(cur);
      if (p == fc.parent.end() || !p->second || !g.has_edge(cur, *p->second)) break;
      cur = *p->second;
    }
    for (VertexId v : path) state[v] = 2;
  }
  for (VertexId v : on_cycle) r.add(v, "cycle", "parent pointers loop back");

  for (VertexId v : g.vertices()) {
    auto it = fc.parent.find(v);
    if (it == fc.parent.end()) {
      r.add(v, "missing", "no entry in the parent map");
      continue;
    }
    const bool has_parent = it->second && g.has_edge(v, *it->second);
    if (has_parent || children.contains(v)) continue;
    if (g.degree(v) == 0) {
      r.coverless.push_back(v);
    } else {
      r.add(v, "uncovered", "no parent and no child");
    }
  }
  return r;
}

Report verify_h_partition(const Graph& g, const HPartition& hp) {
  Report r;
  std::uint32_t top = 0;
  VertexId top_vertex = 0;
  for (VertexId v : g.vertices()) {
    auto it = hp.level.find(v);
    if (it == hp.level.end()) {
      r.add(v, "missing", "no level");
      continue;
    }
    if (it->second < 1) {
      r.add(v, "level-range", "level must be >= 1");
      continue;
    }
    if (it->second > top) {
      top = it->second;
      top_vertex = v;
    }
  }
  for (const auto& [v, l] : hp.level) {
    if (!g.contains(v)) r.add(v, "unknown-vertex", "not a vertex of the graph");
  }

  const std::uint64_t cap = 3 * static_cast<std::uint64_t>(hp.a);
  for (VertexId v : g.vertices()) {
    auto it = hp.level.find(v);
    if (it == hp.level.end() || it->second < 1) continue;
    const std::uint32_t lv = it->second;
    std::uint64_t upper = 0;
    bool lower = false;
    for (VertexId u : g.neighbors(v)) {
      auto ju = hp.level.find(u);
      if (ju == hp.level.end()) continue;
      if (ju->second >= lv) ++upper;
      if (ju->second < lv) lower = true;
    }
    if (upper > cap) {
      r.add(v, "upper-degree",
            std::to_string(upper) + " neighbors at level >= " + std::to_string(lv) +
                ", limit " + std::to_string(cap));
    }
    if (lv > 1 && !lower) {
      r.add(v, "no-lower-neighbor", "level " + std::to_string(lv) + " with no lower neighbor");
    }
  }

  const std::uint32_t ell = std::max(top, hp.ell);
  const std::uint32_t bound = 2 * ceil_log2(std::max<std::size_t>(g.num_vertices(), 1)) + 1;
  if (ell > bound) {
    r.add(top_vertex, "level-count",
          std::to_string(ell) + " levels, bound " + std::to_string(bound));
  }
  return r;
}

Report verify_assignment(const Graph& g, const BackupAssignment& assignment,
                         const std::set<VertexId>& domain) {
  Report r;
  for (const auto& [v, u] : assignment.selection) {
    if (!g.contains(v)) {
      r.add(v, "unknown-vertex", "selector is not in the graph");
    } else if (!g.has_edge(v, u)) {
      r.add(v, "non-edge", "selected " + std::to_string(u) + ", not a neighbor");
    } else if (!domain.contains(v)) {
      r.add(v, "outside-domain", "vertex is not required to select");
    }
  }
  for (VertexId v : domain) {
    if (!assignment.selection.contains(v)) r.add(v, "missing", "no selection");
  }
  return r;
}

}  // namespace bp
