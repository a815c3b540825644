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

#include "bp/graph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace bp {

unsigned ceil_log2(std::uint64_t x) {
  unsigned bits = 0;
  std::uint64_t p = 1;
  while (p < x) {
    p <<= 1;
    ++bits;
  }
  return bits;
}

Graph Graph::build(std::size_t n, std::span<const Edge> edges,
                   GraphMetadata metadata) {
  std::vector<VertexId> ids(n);
  std::iota(ids.begin(), ids.end(), VertexId{0});
  return build(std::move(ids), edges, std::move(metadata));
}

Graph Graph::build(std::vector<VertexId> vertices, std::span<const Edge> edges,
                   GraphMetadata metadata) {
  Graph g;
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw InvalidInput("duplicate vertex id");
  }
  g.ids_ = std::move(vertices);
  g.adj_.resize(g.ids_.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
    }
    if (!g.contains(e.u) || !g.contains(e.v)) {
      throw InvalidInput("edge " + std::to_string(e.u) + "-" +
                         std::to_string(e.v) + " names an unknown vertex");
    }
    g.adj_[g.index_of(e.u)].push_back(e.v);
    g.adj_[g.index_of(e.v)].push_back(e.u);
  }
  for (std::size_t i = 0; i < g.adj_.size(); ++i) {
    auto& list = g.adj_[i];
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) {
      throw InvalidInput("duplicate edge " + std::to_string(g.ids_[i]) + "-" +
                         std::to_string(*dup));
    }
  }
  g.num_edges_ = edges.size();

  if (metadata.bipartite_sides) {
    const auto& sides = *metadata.bipartite_sides;
    std::set<VertexId> u_side(sides.u.begin(), sides.u.end());
    std::set<VertexId> v_side(sides.v.begin(), sides.v.end());
    for (VertexId x : sides.u) {
      if (v_side.count(x) != 0) {
        throw InvalidInput("vertex " + std::to_string(x) + " is on both sides");
      }
    }
    if (u_side.size() + v_side.size() != g.num_vertices()) {
      throw InvalidInput("bipartite sides do not partition the vertex set");
    }
    for (const Edge& e : edges) {
      if ((u_side.count(e.u) != 0) == (u_side.count(e.v) != 0)) {
        throw InvalidInput("edge " + std::to_string(e.u) + "-" +
                           std::to_string(e.v) + " does not cross the sides");
      }
    }
  }
  g.metadata_ = std::move(metadata);
  return g;
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  return adj_[index_of(v)];
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adj_) best = std::max(best, list.size());
  return best;
}

bool Graph::contains(VertexId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (!contains(u) || !contains(v)) return false;
  auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::size_t Graph::index_of(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) {
    throw InvalidInput("unknown vertex " + std::to_string(v));
  }
  return static_cast<std::size_t>(it - ids_.begin());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    for (VertexId w : adj_[i]) {
      if (ids_[i] < w) out.push_back({ids_[i], w});
    }
  }
  return out;
}

unsigned Graph::id_bits() const {
  return std::max(1u, ceil_log2(static_cast<std::uint64_t>(max_id()) + 1));
}

bool Graph::dense_ids() const {
  return ids_.empty() || ids_.back() + 1 == ids_.size();
}

Graph Graph::with_metadata(GraphMetadata metadata) const {
  return build(ids_, edges(), std::move(metadata));
}

bool Graph::operator==(const Graph& other) const {
  return ids_ == other.ids_ && adj_ == other.adj_ &&
         metadata_ == other.metadata_;
}

}  // namespace bp
