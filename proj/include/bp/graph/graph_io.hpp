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

#ifndef BP_GRAPH_GRAPH_IO_HPP_
#define BP_GRAPH_GRAPH_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "bp/graph/graph.hpp"

namespace bp {

// Text format:
//
//   n <count>
//   # meta <json>        (optional)
//   u v                  (one edge per line, u < v)
//
// The meta object may carry "vertices" (only when IDs are not 0..n-1),
// "declared_arboricity", "bipartite_sides", "geometry" and "tree". Loading
// normalizes "v u" lines to "u v" and rejects duplicates and self-loops.
// Errors raise ParseError with the 1-based line number.

void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);

std::string graph_to_string(const Graph& g);
Graph graph_from_string(const std::string& text);

void save_graph(const Graph& g, const std::filesystem::path& path);
Graph load_graph(const std::filesystem::path& path);

}  // namespace bp

#endif  // BP_GRAPH_GRAPH_IO_HPP_
