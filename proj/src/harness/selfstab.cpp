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

#include "bp/harness/selfstab.hpp"

#include <algorithm>
#include <set>

#include "bp/algorithms/programs.hpp"
#include "bp/congest/fingerprint.hpp"
#include "bp/graph/structure.hpp"
#include "bp/oracle/oracle.hpp"
#include "json.hpp"

namespace bp::harness {

using congest::VertexOutput;

bool selfstab_clean(const Graph& g, const std::map<VertexId, VertexOutput>& state,
                    std::size_t c) {
  ForestCover fc;
  BackupAssignment a;
  for (const auto& [v, out] : state) {
    fc.parent[v] = out.parent;
    if (g.degree(v) == 0) continue;
    if (!out.bp || !g.has_edge(v, *out.bp)) return false;
    a.selection[v] = *out.bp;
  }
  if (!verify_forest_cover(g, fc).valid) return false;
  return evaluate_load(g, a).max_load <= 2 * c + 1;
}

bool SelfStabReport::stabilized() const {
  return std::all_of(latencies.begin(), latencies.end(),
                     [](const FaultLatency& f) { return f.latency || f.interrupted; }) &&
         !latencies.empty() && latencies.back().latency.has_value();
}

SelfStabReport run_selfstab(const Graph& g, const std::vector<congest::Fault>& faults,
                            std::uint32_t observe_rounds, std::optional<std::size_t> c,
                            std::uint32_t beta) {
  SelfStabReport report;
  report.c = c ? *c : neighborhood_independence(g);
  report.observed_rounds = observe_rounds;

  using Snapshot = std::map<VertexId, std::pair<std::optional<VertexId>, std::optional<VertexId>>>;
  std::vector<Snapshot> snapshots;
  congest::EngineConfig config;
  config.beta = beta;
  config.max_rounds = observe_rounds;
  config.fault_plan = faults;
  SelfStabBp program;
  const auto t = congest::run(
      g, program, config, [&](std::uint32_t, const std::map<VertexId, VertexOutput>& state) {
        report.clean.push_back(selfstab_clean(g, state, report.c));
        Snapshot s;
        for (const auto& [v, out] : state) s[v] = {out.parent, out.bp};
        snapshots.push_back(std::move(s));
      });
  report.fingerprint = t.fingerprint;

  std::set<std::uint32_t> fault_rounds{0};
  for (const auto& f : faults) fault_rounds.insert(f.round);
  for (auto it = fault_rounds.begin(); it != fault_rounds.end(); ++it) {
    FaultLatency fl;
    fl.round = *it;
    const auto next = std::next(it);
    const std::uint32_t stop =
        std::min<std::uint32_t>(next == fault_rounds.end() ? observe_rounds : *next - 1,
                                observe_rounds);
    // The sample at round r is taken after round r's faults, so a clean
    // sample counts for fault round f only when r > f (r >= 1 initially).
    const std::uint32_t from = std::max<std::uint32_t>(fl.round + 1, 1);
    fl.window = stop >= from ? stop - from + 1 : 0;
    for (std::uint32_t r = from; r <= stop; ++r) {
      if (report.clean[r - 1]) {
        fl.latency = r - fl.round;
        break;
      }
    }
    fl.interrupted = !fl.latency && next != fault_rounds.end() && *next <= observe_rounds;
    report.latencies.push_back(fl);
  }

  const auto& last = report.latencies.back();
  if (last.latency) {
    const std::uint32_t first = std::max(last.round + *last.latency, last.round + 3);
    report.fixed_point = first <= snapshots.size();
    for (std::uint32_t r = first; r <= snapshots.size(); ++r) {
      if (snapshots[r - 1] != snapshots[first - 1] || !report.clean[r - 1]) {
        report.fixed_point = false;
      }
    }
  }
  return report;
}

std::string selfstab_report_to_json(const SelfStabReport& report) {
  nlohmann::json doc;
  doc["c"] = report.c;
  doc["observed_rounds"] = report.observed_rounds;
  nlohmann::json samples = nlohmann::json::array();
  for (std::size_t i = 0; i < report.clean.size(); ++i) {
    samples.push_back({{"round", i + 1}, {"clean", static_cast<bool>(report.clean[i])}});
  }
  doc["samples"] = samples;
  nlohmann::json faults = nlohmann::json::array();
  for (const FaultLatency& f : report.latencies) {
    faults.push_back({{"round", f.round},
                      {"latency", f.latency ? nlohmann::json(*f.latency) : nlohmann::json()},
                      {"interrupted", f.interrupted},
                      {"window", f.window}});
  }
  doc["faults"] = faults;
  doc["stabilized"] = report.stabilized();
  doc["fixed_point"] = report.fixed_point;
  doc["fingerprint"] = congest::to_hex(report.fingerprint);
  return doc.dump(2) + "\n";
}

}  // namespace bp::harness
