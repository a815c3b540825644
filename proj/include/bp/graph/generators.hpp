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

#ifndef BP_GRAPH_GENERATORS_HPP_
#define BP_GRAPH_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>

#include "bp/graph/graph.hpp"

namespace bp {

// Instance families. Every generator labels vertices 0..n-1 and is a pure
// function of its arguments; use relabel_random() for a seed-driven ID
// permutation.

inline constexpr std::size_t kDefaultMaxVertices = std::size_t{1} << 22;

// C_n. declared_arboricity = 2.
Graph generate_cycle(std::size_t n);

// Complete d-ary tree of height h in BFS order: root 0, children of vertex
// k are d*k+1 .. d*k+d. Records root and levels; declared_arboricity = 1.
Graph generate_balanced_tree(std::size_t d, std::size_t h,
                             std::size_t max_vertices = kDefaultMaxVertices);

// generate_balanced_tree(d, h-1) plus exactly one extra child below every
// depth-(h-1) vertex. The extra leaves take IDs above all others, in the
// order of their parents, so levels 0..h-1 match generate_balanced_tree(d, h)
// ID for ID.
Graph generate_single_leaf_tree(std::size_t d, std::size_t h,
                                std::size_t max_vertices = kDefaultMaxVertices);

// Uniform labeled tree decoded from a random Pruefer sequence.
Graph generate_random_tree(std::size_t n, std::uint64_t seed);

// n points uniform in [0,side]^2, edge iff distance <= radius.
Graph generate_udg(std::size_t n, double radius, double side,
                   std::uint64_t seed);

// As generate_udg, with a per-vertex radius uniform in [rmin, rmax] and an
// edge iff distance <= min(R_u, R_v). The point sequence is drawn before the
// radii, so with rmin == rmax the result coincides with generate_udg.
Graph generate_bdg(std::size_t n, double rmin, double rmax, double side,
                   std::uint64_t seed);

// Vertices are the edges of g, numbered by lexicographic rank; adjacent iff
// the underlying edges share an endpoint.
Graph line_graph(const Graph& g);

// Sides U = 0..m-1 and V = m..m+nv-1; every u gets between 1 and
// min(a, nv) distinct random V-neighbors.
Graph generate_bipartite(std::size_t m, std::size_t nv, std::size_t a,
                         std::uint64_t seed);

// Union of k independent uniform spanning trees on 0..n-1, duplicates
// dropped. declared_arboricity = k.
Graph generate_forest_union(std::size_t n, std::size_t k, std::uint64_t seed);

// w x h grid, row-major IDs. declared_arboricity = 3 (the planar bound).
Graph generate_grid(std::size_t w, std::size_t h);

Graph generate_petersen();

// G(n, p); every vertex left isolated is joined to one uniformly chosen
// other vertex so that every vertex can select someone (n >= 2).
Graph generate_gnp(std::size_t n, double p, std::uint64_t seed);

// Applies a uniformly random permutation of the existing IDs; metadata is
// carried through the permutation.
Graph relabel_random(const Graph& g, std::uint64_t seed);

}  // namespace bp

#endif  // BP_GRAPH_GENERATORS_HPP_
