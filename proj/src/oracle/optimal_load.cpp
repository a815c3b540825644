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
#include <stdexcept>
#include <string>

#include "bp/oracle/max_flow.hpp"
#include "bp/oracle/oracle.hpp"

namespace bp {

namespace {

// Selectors on one side, targets on the other, targets capped at t.
class Feasibility {
 public:
  Feasibility(const Graph& g, std::vector<VertexId> selectors, std::vector<VertexId> targets)
      : g_(g), selectors_(std::move(selectors)), targets_(std::move(targets)) {}

  // Witness when every selector can be placed under load t.
  std::optional<BackupAssignment> probe(std::uint64_t t) const {
    const std::size_t s = selectors_.size();
    const std::size_t k = targets_.size();
    const std::size_t source = s + k;
    const std::size_t sink = source + 1;
    MaxFlow flow(sink + 1);
    std::vector<std::vector<std::pair<VertexId, std::size_t>>> arcs(s);
    for (std::size_t i = 0; i < s; ++i) {
      flow.add_edge(source, i, 1);
      for (VertexId u : g_.neighbors(selectors_[i])) {
        auto it = std::lower_bound(targets_.begin(), targets_.end(), u);
        if (it == targets_.end() || *it != u) continue;
        const std::size_t j = static_cast<std::size_t>(it - targets_.begin());
        arcs[i].emplace_back(u, flow.add_edge(i, s + j, 1));
      }
    }
    for (std::size_t j = 0; j < k; ++j) {
      flow.add_edge(s + j, sink, static_cast<std::int64_t>(t));
    }
    if (flow.run(source, sink) != static_cast<std::int64_t>(s)) return std::nullopt;
    BackupAssignment witness;
    for (std::size_t i = 0; i < s; ++i) {
      for (const auto& [u, edge] : arcs[i]) {
        if (flow.flow_on(edge) == 1) {
          witness.selection[selectors_[i]] = u;
          break;
        }
      }
    }
    return witness;
  }

  OracleResult solve(std::uint64_t hi, OracleMode mode) const {
    OracleResult result;
    result.mode = mode;
    if (selectors_.empty()) return result;
    std::uint64_t lo = 1;
    auto best = probe(hi);
    if (!best) throw std::logic_error("infeasible at the maximum degree");
    while (lo < hi) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      if (auto w = probe(mid)) {
        hi = mid;
        best = std::move(w);
      } else {
        lo = mid + 1;
      }
    }
    if (hi > 1 && probe(hi - 1)) {
      throw std::logic_error("feasibility is not monotone at t = " + std::to_string(hi));
    }
    result.t_star = hi;
    result.witness = std::move(*best);
    return result;
  }

 private:
  const Graph& g_;
  std::vector<VertexId> selectors_;
  std::vector<VertexId> targets_;
};

}  // namespace

OracleResult optimal_load(const Graph& g) {
  if (g.empty()) throw InvalidInput("graph has no vertices");
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == 0) throw NoValidSelection(v);
  }
  std::vector<VertexId> all(g.vertices().begin(), g.vertices().end());
  return Feasibility(g, all, all).solve(g.max_degree(), OracleMode::kFull);
}

OracleResult optimal_load_one_sided(const Graph& g) {
  const auto& sides = g.metadata().bipartite_sides;
  if (!sides) throw InvalidInput("one-sided oracle needs bipartite sides");
  std::vector<VertexId> u = sides->u;
  std::vector<VertexId> v = sides->v;
  std::sort(u.begin(), u.end());
  std::sort(v.begin(), v.end());
  for (const Edge& e : g.edges()) {
    const bool a = std::binary_search(u.begin(), u.end(), e.u);
    const bool b = std::binary_search(u.begin(), u.end(), e.v);
    if (a == b) {
      throw PreconditionError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                              " does not cross the sides");
    }
  }
  std::uint64_t hi = 1;
  for (VertexId x : u) {
    if (g.degree(x) == 0) throw NoValidSelection(x);
  }
  for (VertexId x : v) hi = std::max<std::uint64_t>(hi, g.degree(x));
  return Feasibility(g, u, v).solve(hi, OracleMode::kOneSided);
}

LoadProfile evaluate_load(const Graph& g, const BackupAssignment& assignment) {
  LoadProfile profile;
  for (VertexId v : g.vertices()) profile.load[v] = 0;
  for (const auto& [v, u] : assignment.selection) {
    if (!g.contains(v)) throw InvalidAssignment(v, u, "selector is not in the graph");
    if (!g.has_edge(v, u)) throw InvalidAssignment(v, u, "target is not a neighbor");
    profile.max_load = std::max(profile.max_load, ++profile.load[u]);
  }
  return profile;
}

}  // namespace bp
