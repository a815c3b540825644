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

#include "bp/graph/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace bp {
namespace {

using nlohmann::json;

json metadata_to_json(const Graph& g) {
  json meta = json::object();
  const GraphMetadata& m = g.metadata();
  if (!g.dense_ids()) {
    meta["vertices"] = std::vector<VertexId>(g.vertices().begin(), g.vertices().end());
  }
  if (m.declared_arboricity) meta["declared_arboricity"] = *m.declared_arboricity;
  if (m.bipartite_sides) {
    meta["bipartite_sides"] = {{"u", m.bipartite_sides->u},
                               {"v", m.bipartite_sides->v}};
  }
  if (m.geometry) {
    json sites = json::array();
    for (const auto& [v, s] : *m.geometry) sites.push_back({v, s.x, s.y, s.radius});
    meta["geometry"] = std::move(sites);
  }
  if (m.tree) {
    json levels = json::array();
    for (const auto& [v, l] : m.tree->level) levels.push_back({v, l});
    meta["tree"] = {{"root", m.tree->root}, {"level", std::move(levels)}};
  }
  return meta;
}

GraphMetadata metadata_from_json(const json& meta) {
  GraphMetadata m;
  if (meta.contains("declared_arboricity")) {
    m.declared_arboricity = meta.at("declared_arboricity").get<std::uint32_t>();
  }
  if (meta.contains("bipartite_sides")) {
    BipartiteSides sides;
    sides.u = meta.at("bipartite_sides").at("u").get<std::vector<VertexId>>();
    sides.v = meta.at("bipartite_sides").at("v").get<std::vector<VertexId>>();
    m.bipartite_sides = std::move(sides);
  }
  if (meta.contains("geometry")) {
    std::map<VertexId, DiskSite> sites;
    for (const auto& row : meta.at("geometry")) {
      sites[row.at(0).get<VertexId>()] = {row.at(1).get<double>(),
                                          row.at(2).get<double>(),
                                          row.at(3).get<double>()};
    }
    m.geometry = std::move(sites);
  }
  if (meta.contains("tree")) {
    RootedLayout layout;
    layout.root = meta.at("tree").at("root").get<VertexId>();
    for (const auto& row : meta.at("tree").at("level")) {
      layout.level[row.at(0).get<VertexId>()] = row.at(1).get<std::uint32_t>();
    }
    m.tree = std::move(layout);
  }
  return m;
}

}  // namespace

void write_graph(std::ostream& out, const Graph& g) {
  out << "n " << g.num_vertices() << '\n';
  json meta = metadata_to_json(g);
  if (!meta.empty()) out << "# meta " << meta.dump() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_header = false;
  json meta = json::object();
  std::vector<Edge> edges;
  std::set<Edge> seen;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!have_header) {
      std::istringstream hs(line);
      std::string tag;
      long long count = -1;
      std::string rest;
      if (!(hs >> tag >> count) || tag != "n" || count < 0 || (hs >> rest)) {
        throw ParseError(line_no, "expected header 'n <count>'");
      }
      n = static_cast<std::size_t>(count);
      have_header = true;
      continue;
    }
    if (line[0] == '#') {
      constexpr std::string_view kMeta = "# meta ";
      if (line.rfind(kMeta, 0) == 0) {
        try {
          meta = json::parse(line.substr(kMeta.size()));
        } catch (const json::exception& e) {
          throw ParseError(line_no, std::string("bad metadata: ") + e.what());
        }
      }
      continue;
    }
    std::istringstream es(line);
    long long a = -1, b = -1;
    std::string rest;
    if (!(es >> a >> b) || a < 0 || b < 0 || (es >> rest)) {
      throw ParseError(line_no, "expected edge 'u v'");
    }
    if (a == b) throw ParseError(line_no, "self-loop");
    Edge e{static_cast<VertexId>(std::min(a, b)), static_cast<VertexId>(std::max(a, b))};
    if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge");
    edges.push_back(e);
  }
  if (!have_header) throw ParseError(line_no + 1, "missing header 'n <count>'");

  std::vector<VertexId> vertices;
  GraphMetadata metadata;
  try {
    if (meta.contains("vertices")) {
      vertices = meta.at("vertices").get<std::vector<VertexId>>();
    } else {
      vertices.resize(n);
      for (std::size_t i = 0; i < n; ++i) vertices[i] = static_cast<VertexId>(i);
    }
    metadata = metadata_from_json(meta);
  } catch (const json::exception& e) {
    throw ParseError(line_no, std::string("bad metadata: ") + e.what());
  }
  if (vertices.size() != n) {
    throw ParseError(1, "header count disagrees with vertex list");
  }
  try {
    return Graph::build(std::move(vertices), edges, std::move(metadata));
  } catch (const InvalidInput& e) {
    throw ParseError(line_no, e.what());
  }
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

Graph graph_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

void save_graph(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  write_graph(out, g);
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path.string());
  return read_graph(in);
}

}  // namespace bp
