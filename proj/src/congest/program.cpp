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

#include "bp/congest/program.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bp::congest {

const Message* find_message(const Inbox& inbox, VertexId from) {
  auto it = std::lower_bound(
      inbox.begin(), inbox.end(), from,
      [](const Envelope& e, VertexId id) { return e.peer < id; });
  if (it == inbox.end() || it->peer != from) return nullptr;
  return &it->message;
}

void Outbox::send(VertexId to, Message message) {
  for (const Envelope& e : entries_) {
    if (e.peer == to) {
      throw std::logic_error("two messages to " + std::to_string(to) +
                             " in one round");
    }
  }
  entries_.push_back({to, std::move(message)});
}

void Outbox::send_all(std::span<const VertexId> to, const Message& message) {
  for (VertexId v : to) send(v, message);
}

void VertexProcess::corrupt(RamField, std::optional<VertexId>) {
  throw ConfigError("program has no RAM fields to corrupt");
}

void VertexProcess::restate(Outbox&) const {}

void VertexProgram::validate(const Graph&) const {}

}  // namespace bp::congest
