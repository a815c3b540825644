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

#ifndef BP_GRAPH_GRAPH_HPP_
#define BP_GRAPH_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bp/errors.hpp"

namespace bp {

struct Edge {
  VertexId u;
  VertexId v;
  auto operator<=>(const Edge&) const = default;
};

struct DiskSite {
  double x = 0.0;
  double y = 0.0;
  double radius = 0.0;
  bool operator==(const DiskSite&) const = default;
};

struct BipartiteSides {
  std::vector<VertexId> u;  // selecting side
  std::vector<VertexId> v;
  bool operator==(const BipartiteSides&) const = default;
};

struct RootedLayout {
  VertexId root = 0;
  std::map<VertexId, std::uint32_t> level;
  bool operator==(const RootedLayout&) const = default;
};

// Declared properties carried alongside the topology. Generators fill what
// they know; nothing here is trusted by the algorithms without checking.
struct GraphMetadata {
  std::optional<std::uint32_t> declared_arboricity;
  std::optional<BipartiteSides> bipartite_sides;
  std::optional<std::map<VertexId, DiskSite>> geometry;
  std::optional<RootedLayout> tree;
  bool operator==(const GraphMetadata&) const = default;
};

// Undirected simple graph over arbitrary unique unsigned IDs. Immutable once
// built; adjacency lists are sorted ascending.
class Graph {
 public:
  Graph() = default;

  // Builds from an explicit vertex set and edge list. Rejects self-loops,
  // duplicate edges (in either orientation), endpoints outside `vertices`,
  // duplicate vertex IDs, and bipartite metadata that is contradicted by an
  // edge.
  static Graph build(std::vector<VertexId> vertices, std::span<const Edge> edges,
                     GraphMetadata metadata = {});

  // Vertices 0..n-1.
  static Graph build(std::size_t n, std::span<const Edge> edges,
                     GraphMetadata metadata = {});

  std::size_t num_vertices() const { return ids_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  bool empty() const { return ids_.empty(); }

  std::span<const VertexId> vertices() const { return ids_; }
  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  std::size_t max_degree() const;
  bool contains(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;

  // Dense position of `v` in vertices(); throws InvalidInput if absent.
  std::size_t index_of(VertexId v) const;

  // All edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  VertexId max_id() const { return ids_.empty() ? 0 : ids_.back(); }
  // Bits needed to write any vertex ID: ceil(log2(max_id + 1)), at least 1.
  unsigned id_bits() const;
  // True when the vertex set is exactly 0..n-1.
  bool dense_ids() const;

  const GraphMetadata& metadata() const { return metadata_; }
  Graph with_metadata(GraphMetadata metadata) const;

  bool operator==(const Graph& other) const;

 private:
  std::vector<VertexId> ids_;
  std::vector<std::vector<VertexId>> adj_;
  std::size_t num_edges_ = 0;
  GraphMetadata metadata_;
};

// ceil(log2(x)) for x >= 1; 0 for x <= 1.
unsigned ceil_log2(std::uint64_t x);

}  // namespace bp

#endif  // BP_GRAPH_GRAPH_HPP_
