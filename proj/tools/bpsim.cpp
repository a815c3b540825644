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

// bpsim: generate graphs, run backup-placement programs in the CONGEST
// simulator, compute optimal loads, verify artifacts, sweep experiments.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bp/algorithms/structures.hpp"
#include "bp/congest/fingerprint.hpp"
#include "bp/congest/serialize.hpp"
#include "bp/graph/graph_io.hpp"
#include "bp/harness/experiment.hpp"
#include "bp/harness/harness.hpp"
#include "bp/harness/selfstab.hpp"
#include "bp/oracle/oracle.hpp"

namespace {

using namespace bp;
using namespace bp::harness;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

Params parse_pairs(const std::vector<std::string>& items) {
  Params p;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw InvalidParameter("expected key=value, got '" + item + "'");
    }
    p[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return p;
}

// "--n 6 --radius 0.3" style leftovers of the generate subcommand.
FamilyParams parse_flags(const std::vector<std::string>& extras) {
  FamilyParams p;
  for (std::size_t i = 0; i < extras.size(); ++i) {
    std::string key = extras[i];
    if (key.rfind("--", 0) != 0) throw InvalidParameter("unexpected argument '" + key + "'");
    key = key.substr(2);
    if (const auto eq = key.find('='); eq != std::string::npos) {
      p[key.substr(0, eq)] = key.substr(eq + 1);
      continue;
    }
    if (i + 1 >= extras.size()) throw InvalidParameter("--" + key + " needs a value");
    p[key] = extras[++i];
  }
  return p;
}

void summarize(const Graph& g) {
  std::cout << "n=" << g.num_vertices() << " m=" << g.num_edges()
            << " max_degree=" << g.max_degree();
  const auto& meta = g.metadata();
  if (meta.declared_arboricity) std::cout << " declared_arboricity=" << *meta.declared_arboricity;
  if (meta.bipartite_sides) {
    std::cout << " bipartite=" << meta.bipartite_sides->u.size() << "+"
              << meta.bipartite_sides->v.size();
  }
  if (meta.tree) std::cout << " root=" << meta.tree->root;
  if (meta.geometry) std::cout << " geometric";
  std::cout << '\n';
}

int cmd_generate(const std::string& family, const std::vector<std::string>& extras,
                 std::uint64_t seed, const std::string& out) {
  const Graph g = generate_family(family, parse_flags(extras), seed);
  if (!out.empty()) {
    save_graph(g, out);
  } else {
    write_graph(std::cout, g);
  }
  if (!out.empty()) summarize(g);
  return kExitClean;
}

int cmd_run(const std::string& graph_path, const std::string& algorithm,
            const std::vector<std::string>& param_items, const std::string& prefix,
            std::uint32_t max_rounds, std::uint32_t beta, bool vertex_log) {
  const Graph g = load_graph(graph_path);
  const Params params = parse_pairs(param_items);
  congest::EngineConfig config;
  config.max_rounds = max_rounds;
  config.beta = beta;
  config.record_vertex_log = vertex_log;
  const RunOutcome out = run_algorithm(g, algorithm, params, config);
  const auto& t = out.transcript;

  if (!prefix.empty()) {
    write_file(prefix + ".transcript.json", congest::transcript_to_json(t));
    write_file(prefix + ".assignment.txt", assignment_to_text(t));
    const bool has_parent = std::any_of(t.outputs.begin(), t.outputs.end(),
                                        [](const auto& kv) { return kv.second.parent; });
    if (has_parent) write_file(prefix + ".forest.txt", forest_to_text(t));
    const bool has_level = std::any_of(t.outputs.begin(), t.outputs.end(),
                                       [](const auto& kv) { return kv.second.level; });
    if (has_level) {
      std::uint32_t a = 1;
      if (params.contains("a")) {
        a = static_cast<std::uint32_t>(std::stoul(params.at("a")));
      } else if (g.metadata().declared_arboricity) {
        a = *g.metadata().declared_arboricity;
      }
      write_file(prefix + ".hpartition.txt", h_partition_to_text(h_partition_from(t, a)));
    }
  }
  std::cout << "rounds=" << t.rounds_executed << " halted=" << (t.halted ? 1 : 0)
            << " max_load=" << out.max_load << " max_bits=" << t.max_message_bits
            << " budget=" << t.bit_budget << " fingerprint=" << congest::to_hex(t.fingerprint)
            << '\n';
  return kExitClean;
}

int cmd_oracle(const std::string& graph_path, const std::string& mode,
               const std::string& witness_path, bool brute) {
  const Graph g = load_graph(graph_path);
  OracleResult r;
  if (mode == "full") {
    r = optimal_load(g);
  } else if (mode == "one-sided") {
    r = optimal_load_one_sided(g);
  } else {
    throw InvalidParameter("mode must be full or one-sided");
  }
  std::cout << "t_star=" << r.t_star;
  if (brute) std::cout << " brute_force=" << brute_force_optimal_load(g);
  std::cout << '\n';
  if (!witness_path.empty()) {
    std::ostringstream os;
    for (const auto& [v, u] : r.witness.selection) os << v << ' ' << u << '\n';
    write_file(witness_path, os.str());
  }
  return kExitClean;
}

int cmd_verify(const std::string& graph_path, const std::string& artifact,
               const std::string& kind, const std::string& domain) {
  const Graph g = load_graph(graph_path);
  const std::string text = read_file(artifact);
  Report report;
  if (kind == "assignment") {
    const BackupAssignment a = assignment_from_text(text);
    std::set<VertexId> required;
    if (domain == "u") {
      required = selection_domain(g, "bipartite-parallel");
    } else if (domain == "all") {
      required = selection_domain(g, "general-bp");
    } else {
      throw InvalidParameter("domain must be all or u");
    }
    report = verify_assignment(g, a, required);
    if (report.valid) {
      BackupAssignment restricted;
      for (const auto& [v, u] : a.selection) {
        if (required.contains(v)) restricted.selection[v] = u;
      }
      std::cerr << "max_load=" << evaluate_load(g, restricted).max_load << '\n';
    }
  } else if (kind == "forest-cover") {
    report = verify_forest_cover(g, forest_from_text(text));
  } else if (kind == "h-partition") {
    report = verify_h_partition(g, h_partition_from_text(text));
  } else {
    throw InvalidParameter("kind must be assignment, forest-cover or h-partition");
  }
  std::cout << report_to_json(report);
  return report.valid ? kExitClean : kExitVerificationFailed;
}

int cmd_selfstab(const std::string& graph_path, const std::string& faults_path,
                 std::uint32_t observe, const std::string& out, std::uint32_t beta) {
  const Graph g = load_graph(graph_path);
  std::vector<congest::Fault> plan;
  if (!faults_path.empty()) plan = congest::parse_fault_plan(read_file(faults_path));
  const SelfStabReport report = run_selfstab(g, plan, observe, std::nullopt, beta);
  const std::string json = selfstab_report_to_json(report);
  if (!out.empty()) write_file(out, json);
  std::cout << "c=" << report.c;
  for (const auto& f : report.latencies) {
    std::cout << " fault@" << f.round << "=";
    if (f.latency) {
      std::cout << *f.latency;
    } else if (f.interrupted) {
      std::cout << "interrupted";
    } else {
      std::cout << "unstabilized";
    }
  }
  std::cout << " fixed_point=" << (report.fixed_point ? 1 : 0) << '\n';
  return report.stabilized() ? kExitClean : kExitVerificationFailed;
}

int cmd_experiment(const std::string& spec_path, const std::string& out) {
  const ExperimentSpec spec = parse_experiment_spec(read_file(spec_path));
  const std::string csv = rows_to_csv(run_experiment(spec));
  const std::string target = out.empty() ? spec.output : out;
  if (target.empty()) {
    std::cout << csv;
  } else {
    write_file(target, csv);
  }
  return kExitClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CONGEST backup-placement simulator"};
  app.require_subcommand(1);

  std::string family, out, graph, algorithm, kind, artifact, mode = "full", domain = "all";
  std::string witness, faults, spec;
  std::uint64_t seed = 1;
  std::uint32_t max_rounds = 10'000, beta = 4, observe = 20;
  std::vector<std::string> params;
  bool vertex_log = false, brute = false;

  auto* gen = app.add_subcommand("generate", "write a graph file");
  gen->add_option("family", family, "graph family")->required();
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("-o,--out", out, "output file (stdout when omitted)");
  gen->allow_extras();
  gen->footer("Family parameters follow as --key value, e.g. --n 40 --radius 0.3.");

  auto* run = app.add_subcommand("run", "run an algorithm");
  run->add_option("-g,--graph", graph)->required();
  run->add_option("-a,--algorithm", algorithm)->required();
  run->add_option("-p,--param", params, "key=value, repeatable");
  run->add_option("-o,--out", out, "prefix for transcript and artifact files");
  run->add_option("--max-rounds", max_rounds);
  run->add_option("--beta", beta);
  run->add_flag("--vertex-log", vertex_log, "record per-vertex round digests");

  auto* orc = app.add_subcommand("oracle", "optimal load");
  orc->add_option("-g,--graph", graph)->required();
  orc->add_option("-m,--mode", mode, "full or one-sided");
  orc->add_option("-w,--witness", witness, "witness output file");
  orc->add_flag("--brute", brute, "also run the exhaustive search");

  auto* ver = app.add_subcommand("verify", "check an artifact");
  ver->add_option("-g,--graph", graph)->required();
  ver->add_option("--artifact", artifact)->required();
  ver->add_option("-k,--kind", kind, "assignment, forest-cover or h-partition")->required();
  ver->add_option("--domain", domain, "assignment domain: all or u");

  auto* ss = app.add_subcommand("selfstab", "fault injection for self-stab");
  ss->add_option("-g,--graph", graph)->required();
  ss->add_option("-f,--faults", faults, "fault plan JSON");
  ss->add_option("-r,--observe", observe, "rounds to run");
  ss->add_option("-o,--out", out, "report JSON");
  ss->add_option("--beta", beta);

  auto* exp = app.add_subcommand("experiment", "run an experiment spec");
  exp->add_option("spec", spec)->required();
  exp->add_option("-o,--out", out, "CSV output (overrides the spec)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_generate(family, gen->remaining(), seed, out);
    if (*run) return cmd_run(graph, algorithm, params, out, max_rounds, beta, vertex_log);
    if (*orc) return cmd_oracle(graph, mode, witness, brute);
    if (*ver) return cmd_verify(graph, artifact, kind, domain);
    if (*ss) return cmd_selfstab(graph, faults, observe, out, beta);
    if (*exp) return cmd_experiment(spec, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitUsage;
}
