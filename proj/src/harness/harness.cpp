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

#include "bp/harness/harness.hpp"

#include <charconv>
#include <sstream>

#include "bp/graph/generators.hpp"
#include "bp/oracle/oracle.hpp"

namespace bp::harness {

namespace {

class Reader {
 public:
  Reader(const std::string& family, const FamilyParams& params)
      : family_(family), params_(params) {}

  std::size_t size(const std::string& key) {
    const std::string& text = get(key);
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size()) {
      throw InvalidParameter(family_ + ": " + key + "='" + text +
                             "' is not a non-negative integer");
    }
    return value;
  }

  double real(const std::string& key) {
    const std::string& text = get(key);
    try {
      std::size_t used = 0;
      const double value = std::stod(text, &used);
      if (used == text.size()) return value;
    } catch (const std::logic_error&) {
    }
    throw InvalidParameter(family_ + ": " + key + "='" + text + "' is not a number");
  }

  double real(const std::string& key, double fallback) {
    return params_.contains(key) ? real(key) : fallback;
  }

  std::string text(const std::string& key, const std::string& fallback) {
    if (!params_.contains(key)) return fallback;
    return get(key);
  }

  void finish() const {
    for (const auto& [k, v] : params_) {
      if (!used_.contains(k)) {
        throw InvalidParameter("family " + family_ + " takes no parameter '" + k + "'");
      }
    }
  }

 private:
  const std::string& get(const std::string& key) {
    auto it = params_.find(key);
    if (it == params_.end()) {
      throw InvalidParameter("family " + family_ + " needs parameter '" + key + "'");
    }
    used_.insert(key);
    return it->second;
  }

  std::string family_;
  const FamilyParams& params_;
  std::set<std::string> used_;
};

Graph generate_plain(const std::string& family, Reader& r, std::uint64_t seed) {
  if (family == "cycle") return generate_cycle(r.size("n"));
  if (family == "balanced-tree") return generate_balanced_tree(r.size("d"), r.size("h"));
  if (family == "single-leaf-tree") {
    return generate_single_leaf_tree(r.size("d"), r.size("h"));
  }
  if (family == "random-tree") return generate_random_tree(r.size("n"), seed);
  if (family == "udg") {
    return generate_udg(r.size("n"), r.real("radius"), r.real("side", 1.0), seed);
  }
  if (family == "bdg") {
    return generate_bdg(r.size("n"), r.real("rmin"), r.real("rmax"), r.real("side", 1.0), seed);
  }
  if (family == "bipartite") {
    return generate_bipartite(r.size("m"), r.size("nv"), r.size("a"), seed);
  }
  if (family == "forest-union") return generate_forest_union(r.size("n"), r.size("k"), seed);
  if (family == "grid") return generate_grid(r.size("w"), r.size("h"));
  if (family == "petersen") return generate_petersen();
  if (family == "gnp") return generate_gnp(r.size("n"), r.real("p"), seed);
  throw InvalidParameter("unknown graph family '" + family + "'");
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const BudgetViolation*>(&e)) return kExitBudget;
  if (dynamic_cast<const LocalityViolation*>(&e)) return kExitLocality;
  return kExitUsage;
}

std::vector<std::string> family_names() {
  return {"cycle", "balanced-tree", "single-leaf-tree", "random-tree", "udg", "bdg",
          "line-graph", "bipartite", "forest-union", "grid", "petersen", "gnp"};
}

Graph generate_family(const std::string& family, const FamilyParams& params,
                      std::uint64_t seed) {
  FamilyParams rest = params;
  std::optional<std::uint64_t> relabel;
  if (auto it = rest.find("relabel"); it != rest.end()) {
    FamilyParams one{{"relabel", it->second}};
    Reader r(family, one);
    relabel = r.size("relabel");
    rest.erase(it);
  }
  Graph g;
  if (family == "line-graph") {
    std::string base = "petersen";
    if (auto it = rest.find("base"); it != rest.end()) {
      base = it->second;
      rest.erase(it);
    }
    if (base == "line-graph") throw InvalidParameter("line-graph base cannot be line-graph");
    Reader r(base, rest);
    g = line_graph(generate_plain(base, r, seed));
    r.finish();
  } else {
    Reader r(family, rest);
    g = generate_plain(family, r, seed);
    r.finish();
  }
  if (relabel) g = relabel_random(g, *relabel);
  return g;
}

bool is_bipartite_algorithm(const std::string& algorithm) {
  return algorithm.rfind("bipartite-", 0) == 0;
}

std::set<VertexId> selection_domain(const Graph& g, const std::string& algorithm) {
  std::set<VertexId> domain;
  if (is_bipartite_algorithm(algorithm)) {
    if (const auto& sides = g.metadata().bipartite_sides) {
      for (VertexId u : sides->u) {
        if (g.degree(u) > 0) domain.insert(u);
      }
    }
    return domain;
  }
  for (VertexId v : g.vertices()) {
    if (g.degree(v) > 0) domain.insert(v);
  }
  return domain;
}

RunOutcome run_algorithm(const Graph& g, const std::string& algorithm,
                         const Params& params, const congest::EngineConfig& config) {
  const auto program = make_program(algorithm, g, params);
  RunOutcome out;
  out.transcript = congest::run(g, *program, config);
  const auto domain = selection_domain(g, algorithm);
  for (const auto& [v, u] : assignment_from(out.transcript).selection) {
    if (domain.contains(v)) out.assignment.selection[v] = u;
  }
  out.max_load = evaluate_load(g, out.assignment).max_load;
  return out;
}

std::string assignment_to_text(const congest::RunTranscript& t) {
  std::ostringstream os;
  for (const auto& [v, o] : t.outputs) {
    os << v << ' ';
    if (o.bp) {
      os << *o.bp;
    } else {
      os << '-';
    }
    os << '\n';
  }
  return os.str();
}

std::string forest_to_text(const congest::RunTranscript& t) {
  std::ostringstream os;
  for (const auto& [v, o] : t.outputs) {
    os << v << ' ';
    if (o.parent) {
      os << *o.parent;
    } else {
      os << '-';
    }
    os << '\n';
  }
  return os.str();
}

std::string h_partition_to_text(const HPartition& hp) {
  std::ostringstream os;
  os << "# a " << hp.a << '\n';
  for (const auto& [v, l] : hp.level) os << v << ' ' << l << '\n';
  return os.str();
}

namespace {

std::uint64_t parse_number(const std::string& token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError(line, "'" + token + "' is not a non-negative integer");
  }
  return value;
}

// Calls f(line, key, optional value) for each "v x" line.
template <class F>
void for_each_pair(const std::string& text, F f) {
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  std::set<VertexId> seen;
  while (std::getline(in, raw)) {
    ++line;
    if (raw.empty() || raw[0] == '#') continue;
    std::istringstream ls(raw);
    std::string a, b, extra;
    if (!(ls >> a >> b) || (ls >> extra)) throw ParseError(line, "expected two columns");
    const auto key = static_cast<VertexId>(parse_number(a, line));
    if (!seen.insert(key).second) {
      throw ParseError(line, "vertex " + a + " listed twice");
    }
    std::optional<std::uint64_t> value;
    if (b != "-") value = parse_number(b, line);
    f(line, key, value);
  }
}

}  // namespace

BackupAssignment assignment_from_text(const std::string& text) {
  BackupAssignment a;
  for_each_pair(text, [&](std::size_t, VertexId v, std::optional<std::uint64_t> u) {
    if (u) a.selection[v] = static_cast<VertexId>(*u);
  });
  return a;
}

ForestCover forest_from_text(const std::string& text) {
  ForestCover fc;
  for_each_pair(text, [&](std::size_t, VertexId v, std::optional<std::uint64_t> p) {
    fc.parent[v] = p ? std::optional<VertexId>(static_cast<VertexId>(*p)) : std::nullopt;
  });
  return fc;
}

HPartition h_partition_from_text(const std::string& text) {
  HPartition hp;
  std::istringstream in(text);
  std::string first;
  std::getline(in, first);
  std::istringstream hs(first);
  std::string hash, key, value;
  if (!(hs >> hash >> key >> value) || hash != "#" || key != "a") {
    throw ParseError(1, "expected '# a <a>' header");
  }
  hp.a = static_cast<std::uint32_t>(parse_number(value, 1));
  for_each_pair(text, [&](std::size_t line, VertexId v, std::optional<std::uint64_t> l) {
    if (!l) throw ParseError(line, "vertex without a level");
    hp.level[v] = static_cast<std::uint32_t>(*l);
    hp.ell = std::max(hp.ell, hp.level[v]);
  });
  return hp;
}

}  // namespace bp::harness
