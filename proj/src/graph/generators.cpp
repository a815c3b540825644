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

#include "bp/graph/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "bp/graph/random.hpp"

namespace bp {
namespace {

std::size_t balanced_size(std::size_t d, std::size_t h,
                          std::size_t max_vertices) {
  std::size_t total = 0;
  std::size_t layer = 1;
  for (std::size_t depth = 0; depth <= h; ++depth) {
    total += layer;
    if (total > max_vertices) {
      throw InvalidParameter("tree with d=" + std::to_string(d) +
                             ", h=" + std::to_string(h) + " exceeds " +
                             std::to_string(max_vertices) + " vertices");
    }
    if (depth < h) {
      if (layer > max_vertices / d) {
        throw InvalidParameter("tree size overflow");
      }
      layer *= d;
    }
  }
  return total;
}

// Balanced d-ary tree edges in BFS numbering; fills levels.
std::vector<Edge> balanced_edges(std::size_t d, std::size_t n,
                                 RootedLayout& layout) {
  std::vector<Edge> edges;
  layout.root = 0;
  layout.level[0] = 0;
  for (std::size_t child = 1; child < n; ++child) {
    const auto parent = static_cast<VertexId>((child - 1) / d);
    edges.push_back({parent, static_cast<VertexId>(child)});
    layout.level[static_cast<VertexId>(child)] = layout.level[parent] + 1;
  }
  return edges;
}

std::vector<Edge> pruefer_tree(std::size_t n, Rng& rng) {
  std::vector<Edge> edges;
  if (n < 2) return edges;
  if (n == 2) {
    edges.push_back({0, 1});
    return edges;
  }
  std::vector<VertexId> code(n - 2);
  for (auto& x : code) x = static_cast<VertexId>(rng.below(n));
  std::vector<std::size_t> remaining(n, 1);
  for (VertexId x : code) ++remaining[x];
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    if (remaining[v] == 1) leaves.push(static_cast<VertexId>(v));
  }
  for (VertexId x : code) {
    const VertexId leaf = leaves.top();
    leaves.pop();
    edges.push_back({std::min(leaf, x), std::max(leaf, x)});
    if (--remaining[x] == 1) leaves.push(x);
  }
  const VertexId a = leaves.top();
  leaves.pop();
  const VertexId b = leaves.top();
  edges.push_back({std::min(a, b), std::max(a, b)});
  return edges;
}

bool within(const DiskSite& p, const DiskSite& q, double r) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  return dx * dx + dy * dy <= r * r;
}

std::vector<DiskSite> random_points(std::size_t n, double side, Rng& rng) {
  std::vector<DiskSite> pts(n);
  for (auto& p : pts) {
    p.x = rng.uniform(0.0, side);
    p.y = rng.uniform(0.0, side);
  }
  return pts;
}

Graph disk_graph(const std::vector<DiskSite>& pts) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (within(pts[i], pts[j], std::min(pts[i].radius, pts[j].radius))) {
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
      }
    }
  }
  GraphMetadata meta;
  std::map<VertexId, DiskSite> geometry;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    geometry[static_cast<VertexId>(i)] = pts[i];
  }
  meta.geometry = std::move(geometry);
  return Graph::build(pts.size(), edges, std::move(meta));
}

}  // namespace

Graph generate_cycle(std::size_t n) {
  if (n < 3) throw InvalidParameter("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
  }
  edges.push_back({0, static_cast<VertexId>(n - 1)});
  GraphMetadata meta;
  meta.declared_arboricity = 2;
  return Graph::build(n, edges, std::move(meta));
}

Graph generate_balanced_tree(std::size_t d, std::size_t h,
                             std::size_t max_vertices) {
  if (d < 2 || h < 1) throw InvalidParameter("balanced tree needs d >= 2, h >= 1");
  const std::size_t n = balanced_size(d, h, max_vertices);
  RootedLayout layout;
  auto edges = balanced_edges(d, n, layout);
  GraphMetadata meta;
  meta.declared_arboricity = 1;
  meta.tree = std::move(layout);
  return Graph::build(n, edges, std::move(meta));
}

Graph generate_single_leaf_tree(std::size_t d, std::size_t h,
                                std::size_t max_vertices) {
  if (d < 2 || h < 2) {
    throw InvalidParameter("single-leaf tree needs d >= 2, h >= 2");
  }
  const std::size_t inner = balanced_size(d, h - 1, max_vertices);
  RootedLayout layout;
  auto edges = balanced_edges(d, inner, layout);
  std::vector<VertexId> deepest;
  for (const auto& [v, lvl] : layout.level) {
    if (lvl == h - 1) deepest.push_back(v);
  }
  if (inner + deepest.size() > max_vertices) {
    throw InvalidParameter("single-leaf tree exceeds vertex limit");
  }
  auto next = static_cast<VertexId>(inner);
  for (VertexId parent : deepest) {
    edges.push_back({parent, next});
    layout.level[next] = static_cast<std::uint32_t>(h);
    ++next;
  }
  GraphMetadata meta;
  meta.declared_arboricity = 1;
  meta.tree = std::move(layout);
  return Graph::build(next, edges, std::move(meta));
}

Graph generate_random_tree(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw InvalidParameter("random tree needs n >= 1");
  Rng rng(seed);
  auto edges = pruefer_tree(n, rng);
  std::sort(edges.begin(), edges.end());
  GraphMetadata meta;
  meta.declared_arboricity = 1;
  return Graph::build(n, edges, std::move(meta));
}

Graph generate_udg(std::size_t n, double radius, double side,
                   std::uint64_t seed) {
  if (n < 1 || !(radius > 0.0) || !(side > 0.0)) {
    throw InvalidParameter("udg needs n >= 1, radius > 0, side > 0");
  }
  Rng rng(seed);
  auto pts = random_points(n, side, rng);
  for (auto& p : pts) p.radius = radius;
  return disk_graph(pts);
}

Graph generate_bdg(std::size_t n, double rmin, double rmax, double side,
                   std::uint64_t seed) {
  if (!(rmin > 0.0) || rmin > rmax) {
    throw InvalidParameter("bdg needs 0 < rmin <= rmax");
  }
  if (n < 1 || !(side > 0.0)) throw InvalidParameter("bdg needs n >= 1, side > 0");
  Rng rng(seed);
  auto pts = random_points(n, side, rng);
  for (auto& p : pts) p.radius = rng.uniform(rmin, rmax);
  return disk_graph(pts);
}

Graph line_graph(const Graph& g) {
  const auto base = g.edges();
  if (base.empty()) throw InvalidInput("line graph of an edgeless graph");
  // Edges incident to each base vertex, by rank.
  std::map<VertexId, std::vector<VertexId>> incident;
  for (std::size_t rank = 0; rank < base.size(); ++rank) {
    incident[base[rank].u].push_back(static_cast<VertexId>(rank));
    incident[base[rank].v].push_back(static_cast<VertexId>(rank));
  }
  std::set<Edge> edges;
  for (const auto& [vertex, ranks] : incident) {
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      for (std::size_t j = i + 1; j < ranks.size(); ++j) {
        edges.insert({std::min(ranks[i], ranks[j]), std::max(ranks[i], ranks[j])});
      }
    }
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::build(base.size(), list);
}

Graph generate_bipartite(std::size_t m, std::size_t nv, std::size_t a,
                         std::uint64_t seed) {
  if (m < 1 || nv < 1 || a < 1) {
    throw InvalidParameter("bipartite needs m, nv, a >= 1");
  }
  Rng rng(seed);
  const std::size_t cap = std::min(a, nv);
  std::vector<Edge> edges;
  std::vector<VertexId> pool(nv);
  for (std::size_t u = 0; u < m; ++u) {
    const std::size_t deg = 1 + rng.below(cap);
    for (std::size_t i = 0; i < nv; ++i) pool[i] = static_cast<VertexId>(m + i);
    // Partial Fisher-Yates: the first `deg` slots become the sample.
    for (std::size_t i = 0; i < deg; ++i) {
      std::swap(pool[i], pool[i + rng.below(nv - i)]);
      edges.push_back({static_cast<VertexId>(u), pool[i]});
    }
  }
  std::sort(edges.begin(), edges.end());
  BipartiteSides sides;
  for (std::size_t u = 0; u < m; ++u) sides.u.push_back(static_cast<VertexId>(u));
  for (std::size_t v = 0; v < nv; ++v) sides.v.push_back(static_cast<VertexId>(m + v));
  GraphMetadata meta;
  meta.bipartite_sides = std::move(sides);
  return Graph::build(m + nv, edges, std::move(meta));
}

Graph generate_forest_union(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n < 2 || k < 1) throw InvalidParameter("forest union needs n >= 2, k >= 1");
  Rng rng(seed);
  std::set<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    for (const Edge& e : pruefer_tree(n, rng)) edges.insert(e);
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  GraphMetadata meta;
  meta.declared_arboricity = static_cast<std::uint32_t>(k);
  return Graph::build(n, list, std::move(meta));
}

Graph generate_grid(std::size_t w, std::size_t h) {
  if (w < 1 || h < 1) throw InvalidParameter("grid needs w, h >= 1");
  std::vector<Edge> edges;
  auto id = [w](std::size_t x, std::size_t y) {
    return static_cast<VertexId>(y * w + x);
  };
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      if (x + 1 < w) edges.push_back({id(x, y), id(x + 1, y)});
      if (y + 1 < h) edges.push_back({id(x, y), id(x, y + 1)});
    }
  }
  std::sort(edges.begin(), edges.end());
  GraphMetadata meta;
  meta.declared_arboricity = 3;
  return Graph::build(w * h, edges, std::move(meta));
}

Graph generate_petersen() {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.push_back({i, static_cast<VertexId>((i + 1) % 5)});  // outer cycle
    edges.push_back({i, static_cast<VertexId>(i + 5)});        // spokes
    edges.push_back({static_cast<VertexId>(i + 5),
                     static_cast<VertexId>(5 + (i + 2) % 5)});  // pentagram
  }
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  GraphMetadata meta;
  meta.declared_arboricity = 2;
  return Graph::build(10, edges, std::move(meta));
}

Graph generate_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (n < 2 || p < 0.0 || p > 1.0) {
    throw InvalidParameter("gnp needs n >= 2 and p in [0, 1]");
  }
  Rng rng(seed);
  std::set<Edge> edges;
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.unit() < p) {
        edges.insert({static_cast<VertexId>(i), static_cast<VertexId>(j)});
        ++degree[i];
        ++degree[j];
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (degree[i] != 0) continue;
    std::size_t j = rng.below(n - 1);
    if (j >= i) ++j;
    edges.insert({static_cast<VertexId>(std::min(i, j)),
                  static_cast<VertexId>(std::max(i, j))});
    ++degree[i];
    ++degree[j];
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::build(n, list);
}

Graph relabel_random(const Graph& g, std::uint64_t seed) {
  std::vector<VertexId> old_ids(g.vertices().begin(), g.vertices().end());
  std::vector<VertexId> new_ids = old_ids;
  Rng rng(seed);
  rng.shuffle(new_ids);
  std::map<VertexId, VertexId> map;
  for (std::size_t i = 0; i < old_ids.size(); ++i) map[old_ids[i]] = new_ids[i];

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const VertexId a = map.at(e.u);
    const VertexId b = map.at(e.v);
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(edges.begin(), edges.end());

  GraphMetadata meta = g.metadata();
  if (meta.bipartite_sides) {
    for (auto& x : meta.bipartite_sides->u) x = map.at(x);
    for (auto& x : meta.bipartite_sides->v) x = map.at(x);
    std::sort(meta.bipartite_sides->u.begin(), meta.bipartite_sides->u.end());
    std::sort(meta.bipartite_sides->v.begin(), meta.bipartite_sides->v.end());
  }
  if (meta.geometry) {
    std::map<VertexId, DiskSite> moved;
    for (const auto& [v, site] : *meta.geometry) moved[map.at(v)] = site;
    meta.geometry = std::move(moved);
  }
  if (meta.tree) {
    RootedLayout moved;
    moved.root = map.at(meta.tree->root);
    for (const auto& [v, lvl] : meta.tree->level) moved.level[map.at(v)] = lvl;
    meta.tree = std::move(moved);
  }
  return Graph::build(new_ids, edges, std::move(meta));
}

}  // namespace bp
