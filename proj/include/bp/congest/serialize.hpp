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

#ifndef BP_CONGEST_SERIALIZE_HPP_
#define BP_CONGEST_SERIALIZE_HPP_

#include <string>
#include <vector>

#include "bp/congest/engine.hpp"

namespace bp::congest {

// Parses a JSON list of {round, vertex, field, value}. `vertex` may be "*"
// for every vertex; `value` is an integer, null, or "random(<seed>)".
// Throws ConfigError on malformed entries.
std::vector<Fault> parse_fault_plan(const std::string& json_text);

std::string fault_plan_to_json(const std::vector<Fault>& plan);

// Indented JSON with every RunTranscript field; the fingerprint is written
// as 16 hex digits.
std::string transcript_to_json(const RunTranscript& transcript);

}  // namespace bp::congest

#endif  // BP_CONGEST_SERIALIZE_HPP_
