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

#include "bp/harness/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "bp/graph/structure.hpp"
#include "bp/oracle/oracle.hpp"
#include "json.hpp"

namespace bp::harness {

using nlohmann::json;

namespace {

std::string scalar_text(const json& value, const std::string& where) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer() || value.is_number_unsigned()) return value.dump();
  if (value.is_number_float()) {
    // Shortest text that reads back to the same double.
    char buf[32];
    for (int precision = 1; precision <= 17; ++precision) {
      std::snprintf(buf, sizeof buf, "%.*g", precision, value.get<double>());
      if (std::stod(buf) == value.get<double>()) break;
    }
    return buf;
  }
  throw ConfigError(where + " must be a number or a string");
}

Params params_of(const json& obj, const std::string& where) {
  Params p;
  if (obj.is_null()) return p;
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [k, v] : obj.items()) p[k] = scalar_text(v, where + "." + k);
  return p;
}

std::vector<FamilyParams> expand(const std::map<std::string, std::vector<std::string>>& grid) {
  std::vector<FamilyParams> out{{}};
  for (const auto& [key, values] : grid) {
    std::vector<FamilyParams> next;
    for (const auto& partial : out) {
      for (const auto& v : values) {
        FamilyParams p = partial;
        p[key] = v;
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::string graph_id(const std::string& family, const FamilyParams& params,
                     std::uint64_t seed) {
  std::ostringstream os;
  os << family << '[';
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) os << ',';
    os << k << '=' << v;
    first = false;
  }
  os << "]#s" << seed;
  return os.str();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch == '\n' ? ' ' : ch;
  }
  return out + "\"";
}

template <class T>
std::string cell(const std::optional<T>& v) {
  if (!v) return "";
  return std::to_string(*v);
}

std::string cell(const std::optional<double>& v) {
  if (!v) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", *v);
  return buf;
}

// The structural parameter each algorithm's bound is stated in.
std::optional<std::uint64_t> structural_parameter(const Graph& g, const std::string& algorithm,
                                                  const Params& params,
                                                  const ExperimentSpec& spec) {
  if (algorithm == "tree-bp" || algorithm == "optimal-tree-bp") return 1;
  if (algorithm == "general-bp" || algorithm == "self-stab" || algorithm == "forest-cover") {
    if (g.num_vertices() > spec.flow_oracle_max_n) return std::nullopt;
    return neighborhood_independence(g);
  }
  if (auto it = params.find("a"); it != params.end()) return std::stoull(it->second);
  if (is_bipartite_algorithm(algorithm)) {
    std::uint64_t a = 1;
    if (const auto& sides = g.metadata().bipartite_sides) {
      for (VertexId u : sides->u) a = std::max<std::uint64_t>(a, g.degree(u));
    }
    return a;
  }
  if (g.metadata().declared_arboricity) return *g.metadata().declared_arboricity;
  return std::nullopt;
}

}  // namespace

ExperimentSpec parse_experiment_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("experiment spec is not JSON: ") + e.what());
  }
  ExperimentSpec spec;
  try {
    const json& gen = doc.at("generator");
    spec.family = gen.at("family").get<std::string>();
    if (gen.contains("params")) {
      for (const auto& [k, v] : gen["params"].items()) {
        auto& list = spec.params[k];
        if (v.is_array()) {
          for (const auto& x : v) list.push_back(scalar_text(x, "generator.params." + k));
        } else {
          list.push_back(scalar_text(v, "generator.params." + k));
        }
        if (list.empty()) throw ConfigError("generator.params." + k + " is an empty list");
      }
    }
    if (gen.contains("seeds")) {
      const json& s = gen["seeds"];
      spec.seeds.clear();
      if (s.is_array() && s.size() == 2 && s[0].is_number_unsigned() &&
          s[1].is_number_unsigned()) {
        for (auto x = s[0].get<std::uint64_t>(); x <= s[1].get<std::uint64_t>(); ++x) {
          spec.seeds.push_back(x);
        }
      } else if (s.is_object() && s.contains("list")) {
        spec.seeds = s["list"].get<std::vector<std::uint64_t>>();
      } else {
        throw ConfigError("generator.seeds must be [from, to] or {\"list\": [...]}");
      }
    }
    for (const json& a : doc.at("algorithms")) {
      AlgorithmSpec as;
      as.name = a.at("name").get<std::string>();
      as.params = params_of(a.value("params", json()), "algorithms.params");
      if (a.contains("max_rounds")) as.max_rounds = a["max_rounds"].get<std::uint32_t>();
      spec.algorithms.push_back(std::move(as));
    }
    if (doc.contains("engine")) {
      const json& e = doc["engine"];
      spec.engine.max_rounds = e.value("max_rounds", spec.engine.max_rounds);
      spec.engine.beta = e.value("beta", spec.engine.beta);
      spec.engine.seed = e.value("seed", spec.engine.seed);
    }
    if (doc.contains("metrics")) spec.metrics = doc["metrics"].get<std::vector<std::string>>();
    for (const auto& m : spec.metrics) {
      if (m != "wall_time_ms") throw ConfigError("unknown metric '" + m + "'");
    }
    if (doc.contains("oracle")) {
      spec.flow_oracle_max_n = doc["oracle"].value("flow_max_n", spec.flow_oracle_max_n);
      spec.brute_force_max_n = doc["oracle"].value("brute_max_n", spec.brute_force_max_n);
    }
    spec.output = doc.value("output", std::string());
  } catch (const json::exception& e) {
    throw ConfigError(std::string("experiment spec: ") + e.what());
  }
  if (spec.algorithms.empty()) throw ConfigError("experiment lists no algorithms");
  if (spec.engine.beta < 1 || spec.engine.max_rounds < 1) {
    throw ConfigError("engine beta and max_rounds must be >= 1");
  }
  return spec;
}

std::vector<ResultRow> run_experiment(const ExperimentSpec& spec) {
  const bool timed = std::find(spec.metrics.begin(), spec.metrics.end(), "wall_time_ms") !=
                     spec.metrics.end();
  std::vector<ResultRow> rows;
  for (const FamilyParams& fp : expand(spec.params)) {
    for (std::uint64_t seed : spec.seeds) {
      const std::string id = graph_id(spec.family, fp, seed);
      Graph g;
      std::string graph_error;
      try {
        g = generate_family(spec.family, fp, seed);
      } catch (const std::exception& e) {
        graph_error = e.what();
      }

      std::optional<OracleResult> full, one_sided;
      std::string full_error, one_sided_error;
      auto oracle = [&](bool one) -> std::optional<std::uint64_t> {
        auto& slot = one ? one_sided : full;
        auto& err = one ? one_sided_error : full_error;
        if (!slot && err.empty()) {
          try {
            if (g.num_vertices() <= spec.flow_oracle_max_n) {
              slot = one ? optimal_load_one_sided(g) : optimal_load(g);
            } else if (!one && g.num_vertices() <= spec.brute_force_max_n) {
              OracleResult r;
              r.t_star = brute_force_optimal_load(g);
              slot = r;
            }
          } catch (const std::exception& e) {
            err = e.what();
          }
        }
        if (!slot) return std::nullopt;
        return slot->t_star;
      };

      for (const AlgorithmSpec& alg : spec.algorithms) {
        ResultRow row;
        row.graph_id = id;
        row.algorithm = alg.name;
        if (!graph_error.empty()) {
          row.error = graph_error;
          rows.push_back(std::move(row));
          continue;
        }
        row.n = g.num_vertices();
        row.m = g.num_edges();
        try {
          congest::EngineConfig config = spec.engine;
          if (alg.max_rounds) config.max_rounds = *alg.max_rounds;
          const auto start = std::chrono::steady_clock::now();
          const RunOutcome out = run_algorithm(g, alg.name, alg.params, config);
          const auto stop = std::chrono::steady_clock::now();
          row.rounds = out.transcript.rounds_executed;
          row.max_message_bits = out.transcript.max_message_bits;
          if (alg.name != "procedure-partition" && alg.name != "forest-cover") {
            row.max_load = out.max_load;
            row.t_star = oracle(is_bipartite_algorithm(alg.name));
            if (row.t_star && *row.t_star > 0) {
              row.approx_ratio = static_cast<double>(*row.max_load) / *row.t_star;
            }
          }
          row.c_or_a = structural_parameter(g, alg.name, alg.params, spec);
          if (timed) {
            row.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
          }
        } catch (const std::exception& e) {
          ResultRow failed;
          failed.graph_id = row.graph_id;
          failed.algorithm = row.algorithm;
          failed.n = row.n;
          failed.m = row.m;
          failed.error = e.what();
          row = std::move(failed);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    return std::tie(a.graph_id, a.algorithm) < std::tie(b.graph_id, b.algorithm);
  });
  return rows;
}

std::string rows_to_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream os;
  os << "graph_id,n,m,algorithm,rounds,max_load,t_star,approx_ratio,max_message_bits,"
        "c_or_a,wall_time_ms,error\n";
  for (const ResultRow& r : rows) {
    os << csv_escape(r.graph_id) << ',' << r.n << ',' << r.m << ',' << csv_escape(r.algorithm)
       << ',' << cell(r.rounds) << ',' << cell(r.max_load) << ',' << cell(r.t_star) << ','
       << cell(r.approx_ratio) << ',' << cell(r.max_message_bits) << ',' << cell(r.c_or_a)
       << ',' << cell(r.wall_time_ms) << ',' << csv_escape(r.error) << '\n';
  }
  return os.str();
}

}  // namespace bp::harness
