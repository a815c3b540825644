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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "bp/graph/generators.hpp"
#include "bp/graph/graph_io.hpp"

namespace bp {
namespace {

TEST(GraphIo, RoundTripsMetadata) {
  const std::vector<Graph> graphs{
      generate_cycle(6),          generate_balanced_tree(3, 2),
      generate_udg(20, 0.4, 1.0, 3), generate_bdg(20, 0.1, 0.3, 1.0, 4),
      generate_bipartite(6, 4, 2, 1), relabel_random(generate_grid(3, 4), 2),
      Graph::build(1, {})};
  for (const Graph& g : graphs) {
    const std::string text = graph_to_string(g);
    const Graph back = graph_from_string(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(graph_to_string(back), text);
  }
}

TEST(GraphIo, SaveAndLoad) {
  const auto path = std::filesystem::temp_directory_path() / "bp_io_c6.txt";
  const Graph c6 = generate_cycle(6);
  save_graph(c6, path);
  EXPECT_EQ(load_graph(path), c6);
  std::filesystem::remove(path);
  EXPECT_THROW(load_graph(path), Error);
}

TEST(GraphIo, FormatIsCanonical) {
  EXPECT_EQ(graph_to_string(generate_cycle(3)),
            "n 3\n# meta {\"declared_arboricity\":2}\n0 1\n0 2\n1 2\n");
}

TEST(GraphIo, ReversedPairIsAccepted) {
  const Graph g = graph_from_string("n 3\n1 0\n2 1\n");
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_EQ(graph_to_string(g), "n 3\n0 1\n1 2\n");
}

TEST(GraphIo, RejectsDuplicatesAndSelfLoops) {
  try {
    graph_from_string("n 3\n0 1\n1 2\n1 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
  try {
    graph_from_string("n 3\n0 1\n2 2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(GraphIo, MalformedInputsNameTheLine) {
  const std::vector<std::pair<std::string, std::size_t>> cases{
      {"", 1},
      {"m 3\n", 1},
      {"n 3\n0 x\n", 2},
      {"n 3\n0 1 2\n", 2},
      {"n 3\n0 5\n", 2},
      {"n 3\n# meta {bad json\n", 2},
  };
  for (const auto& [text, line] : cases) {
    try {
      graph_from_string(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << text;
    }
  }
}

TEST(GraphIo, IgnoresCommentsAndBlankLines) {
  const Graph g = graph_from_string("n 2\n# a comment\n\n0 1\n");
  EXPECT_EQ(g.num_edges(), 1u);
}

}  // namespace
}  // namespace bp
