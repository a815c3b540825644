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

#include "bp/congest/serialize.hpp"

#include <cstdint>
#include <string>

#include "bp/congest/fingerprint.hpp"
#include "json.hpp"

namespace bp::congest {

using nlohmann::json;

namespace {

Fault parse_fault(const json& entry) {
  if (!entry.is_object()) throw ConfigError("fault entry must be an object");
  Fault f;
  if (!entry.contains("round") || !entry["round"].is_number_unsigned()) {
    throw ConfigError("fault entry needs a non-negative integer round");
  }
  f.round = entry["round"].get<std::uint32_t>();

  const json& vertex = entry.value("vertex", json("*"));
  if (vertex.is_string() && vertex.get<std::string>() == "*") {
    f.vertex.reset();
  } else if (vertex.is_number_unsigned()) {
    f.vertex = vertex.get<VertexId>();
  } else {
    throw ConfigError("fault vertex must be an ID or \"*\"");
  }

  f.field = entry.value("field", std::string("all"));
  if (f.field != "Parent" && f.field != "BP" && f.field != "all") {
    throw ConfigError("fault targets '" + f.field +
                      "', which is not a RAM field (Parent, BP, all)");
  }

  const json& value = entry.contains("value") ? entry["value"] : json(nullptr);
  if (value.is_null()) {
    f.kind = Fault::Value::kNull;
  } else if (value.is_number_unsigned()) {
    f.kind = Fault::Value::kFixed;
    f.fixed = value.get<VertexId>();
  } else if (value.is_string()) {
    const std::string s = value.get<std::string>();
    const std::string prefix = "random(";
    if (s.rfind(prefix, 0) != 0 || s.back() != ')') {
      throw ConfigError("fault value '" + s + "' is not random(<seed>)");
    }
    try {
      std::size_t used = 0;
      const std::string digits = s.substr(prefix.size(), s.size() - prefix.size() - 1);
      f.random_seed = std::stoull(digits, &used);
      if (used != digits.size()) throw std::invalid_argument(digits);
    } catch (const std::logic_error&) {
      throw ConfigError("fault value '" + s + "' has a bad seed");
    }
    f.kind = Fault::Value::kRandom;
  } else {
    throw ConfigError("fault value must be an ID, null or \"random(<seed>)\"");
  }
  return f;
}

json output_to_json(const VertexOutput& out) {
  json j = json::object();
  j["bp"] = out.bp ? json(*out.bp) : json(nullptr);
  j["parent"] = out.parent ? json(*out.parent) : json(nullptr);
  j["level"] = out.level ? json(*out.level) : json(nullptr);
  j["reported_load"] = out.reported_load ? json(*out.reported_load) : json(nullptr);
  j["aux"] = json::object();
  for (const auto& [k, v] : out.aux) j["aux"][k] = v;
  return j;
}

}  // namespace

std::vector<Fault> parse_fault_plan(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("fault plan is not JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ConfigError("fault plan must be a JSON list");
  std::vector<Fault> plan;
  for (const json& entry : doc) plan.push_back(parse_fault(entry));
  return plan;
}

std::string fault_plan_to_json(const std::vector<Fault>& plan) {
  json doc = json::array();
  for (const Fault& f : plan) {
    json e;
    e["round"] = f.round;
    e["vertex"] = f.vertex ? json(*f.vertex) : json("*");
    e["field"] = f.field;
    switch (f.kind) {
      case Fault::Value::kNull: e["value"] = nullptr; break;
      case Fault::Value::kFixed: e["value"] = f.fixed; break;
      case Fault::Value::kRandom:
        e["value"] = "random(" + std::to_string(f.random_seed) + ")";
        break;
    }
    doc.push_back(e);
  }
  return doc.dump(2) + "\n";
}

std::string transcript_to_json(const RunTranscript& t) {
  json doc;
  doc["program"] = t.program;
  doc["rounds_executed"] = t.rounds_executed;
  doc["halted"] = t.halted;
  doc["bit_budget"] = t.bit_budget;
  doc["max_message_bits"] = t.max_message_bits;
  json rounds = json::array();
  for (const RoundStats& r : t.per_round_bits) {
    rounds.push_back({{"round", r.round},
                      {"messages", r.messages},
                      {"total_bits", r.total_bits},
                      {"max_bits", r.max_bits}});
  }
  doc["per_round_bits"] = rounds;
  // Keys are strings in JSON; keep an explicit vertex field so the list is
  // ordered by numeric ID rather than lexicographically.
  json outputs = json::array();
  for (const auto& [v, out] : t.outputs) {
    json o = output_to_json(out);
    o["vertex"] = v;
    outputs.push_back(o);
  }
  doc["outputs"] = outputs;
  if (t.vertex_log) {
    json log = json::array();
    for (const VertexLogEntry& e : *t.vertex_log) {
      log.push_back({{"round", e.round},
                     {"vertex", e.vertex},
                     {"sent", to_hex(e.sent_digest)},
                     {"received", to_hex(e.received_digest)}});
    }
    doc["per_vertex_round_log"] = log;
  } else {
    doc["per_vertex_round_log"] = nullptr;
  }
  doc["fingerprint"] = to_hex(t.fingerprint);
  return doc.dump(2) + "\n";
}

}  // namespace bp::congest
