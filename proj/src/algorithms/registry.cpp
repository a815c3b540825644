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

#include "bp/algorithms/registry.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "bp/algorithms/programs.hpp"
#include "bp/algorithms/structures.hpp"

namespace bp {

namespace {

std::uint64_t parse_uint(const Params& params, const std::string& key) {
  const std::string& text = params.at(key);
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw InvalidParameter("parameter " + key + "='" + text +
                           "' is not a non-negative integer");
  }
  return value;
}

std::optional<std::uint64_t> optional_uint(const Params& params, const std::string& key) {
  if (!params.contains(key)) return std::nullopt;
  return parse_uint(params, key);
}

void allow_only(const Params& params, const std::set<std::string>& keys,
                const std::string& program) {
  for (const auto& [k, v] : params) {
    if (k != "seed" && !keys.contains(k)) {
      throw InvalidParameter("program " + program + " takes no parameter '" + k + "'");
    }
  }
}

std::set<VertexId> u_side_of(const Graph& g) {
  const auto& sides = g.metadata().bipartite_sides;
  if (!sides) throw PreconditionError("graph carries no bipartite sides");
  return {sides->u.begin(), sides->u.end()};
}

BipartiteParams bipartite_params(const Graph& g, const Params& params,
                                 const std::set<VertexId>& u_side, BipartiteMode mode) {
  BipartiteParams p;
  p.mode = mode;
  if (auto a = optional_uint(params, "a")) {
    p.a = *a;
  } else {
    p.a = 1;
    for (VertexId u : u_side) p.a = std::max<std::uint64_t>(p.a, g.degree(u));
  }
  p.t = optional_uint(params, "t");
  p.n_estimate = optional_uint(params, "n_estimate").value_or(0);
  if (mode == BipartiteMode::kKnownT && !p.t) {
    throw InvalidParameter("bipartite-known needs t");
  }
  return p;
}

}  // namespace

std::vector<std::string> program_names() {
  return {"tree-bp",          "optimal-tree-bp",    "forest-cover",
          "general-bp",       "bipartite-known",    "bipartite-doubling",
          "bipartite-parallel", "procedure-partition", "arboricity-bp",
          "self-stab"};
}

std::unique_ptr<congest::VertexProgram> make_program(const std::string& name,
                                                     const Graph& g,
                                                     const Params& params) {
  if (name == "tree-bp") {
    allow_only(params, {}, name);
    return std::make_unique<TreeBp>(tree_orientation(g));
  }
  if (name == "optimal-tree-bp") {
    allow_only(params, {"t"}, name);
    if (!params.contains("t")) throw InvalidParameter("optimal-tree-bp needs t");
    return std::make_unique<OptimalTreeBp>(tree_orientation(g), parse_uint(params, "t"));
  }
  if (name == "forest-cover") {
    allow_only(params, {}, name);
    return std::make_unique<ForestCoverProgram>();
  }
  if (name == "general-bp") {
    allow_only(params, {}, name);
    return std::make_unique<GeneralBp>();
  }
  if (name == "self-stab") {
    allow_only(params, {}, name);
    return std::make_unique<SelfStabBp>();
  }
  if (name == "bipartite-known" || name == "bipartite-doubling" ||
      name == "bipartite-parallel") {
    allow_only(params, {"a", "t", "n_estimate"}, name);
    const BipartiteMode mode = name == "bipartite-known"      ? BipartiteMode::kKnownT
                               : name == "bipartite-doubling" ? BipartiteMode::kDoubling
                                                              : BipartiteMode::kParallel;
    auto u_side = u_side_of(g);
    const auto p = bipartite_params(g, params, u_side, mode);
    return std::make_unique<BipartiteBp>(p, std::move(u_side));
  }
  if (name == "procedure-partition" || name == "arboricity-bp") {
    const bool arb = name == "arboricity-bp";
    allow_only(params, arb ? std::set<std::string>{"a", "t", "mode", "n_estimate"}
                           : std::set<std::string>{"a", "n_estimate"},
               name);
    std::uint64_t a = 0;
    if (auto given = optional_uint(params, "a")) {
      a = *given;
    } else if (g.metadata().declared_arboricity) {
      a = *g.metadata().declared_arboricity;
    } else {
      throw InvalidParameter(name + " needs a (graph declares no arboricity)");
    }
    const std::uint64_t n_est = optional_uint(params, "n_estimate").value_or(0);
    if (!arb) return std::make_unique<ProcedurePartition>(a, n_est);
    BipartiteParams p;
    p.a = a;
    p.t = optional_uint(params, "t");
    p.n_estimate = n_est;
    p.mode = params.contains("mode") ? parse_bipartite_mode(params.at("mode"))
                                     : BipartiteMode::kParallel;
    return std::make_unique<ArboricityBp>(p);
  }
  throw InvalidParameter("unknown algorithm '" + name + "'");
}

}  // namespace bp
