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

#ifndef BP_CONGEST_PROGRAM_HPP_
#define BP_CONGEST_PROGRAM_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bp/congest/message.hpp"
#include "bp/graph/graph.hpp"

namespace bp::congest {

// Everything a vertex may know when it starts: its ID, its neighbors' IDs
// (granted at init, no exchange round), the wire width of IDs and the exact
// vertex count. Per-vertex algorithm inputs (tree orientation, bipartite
// side) are handed out by the program at spawn time.
struct LocalView {
  VertexId id = 0;
  std::vector<VertexId> neighbors;  // sorted ascending
  unsigned id_bits = 1;
  std::uint64_t n = 1;
};

struct Envelope {
  VertexId peer = 0;  // sender in an inbox, receiver in an outbox
  Message message;
};

// Messages received this round, ascending by sender.
using Inbox = std::vector<Envelope>;

const Message* find_message(const Inbox& inbox, VertexId from);

// At most one message per neighbor per round.
class Outbox {
 public:
  void send(VertexId to, Message message);
  void send_all(std::span<const VertexId> to, const Message& message);

  const std::vector<Envelope>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Envelope> entries_;
};

enum class Status { kRunning, kHalted };

// Fields are filled per program; see each program's documentation.
struct VertexOutput {
  std::optional<VertexId> bp;
  std::optional<VertexId> parent;
  std::optional<std::uint32_t> level;
  std::optional<std::uint64_t> reported_load;
  std::map<std::string, std::int64_t> aux;
  bool operator==(const VertexOutput&) const = default;
};

enum class RamField { kParent, kBp };

// One vertex's state machine. Holds only what its LocalView and the
// messages it has received tell it.
class VertexProcess {
 public:
  virtual ~VertexProcess() = default;

  // Consumes the messages sent to this vertex in round - 1 and queues the
  // messages that become readable in round + 1.
  virtual Status step(std::uint32_t round, const Inbox& inbox, Outbox& outbox) = 0;

  virtual VertexOutput output() const = 0;

  // Overwrites a RAM field. Programs without RAM reject every corruption.
  virtual void corrupt(RamField field, std::optional<VertexId> value);

  // After a corruption, replaces this round's outgoing messages with what the
  // corrupted state would have announced. Default: no replacement.
  virtual void restate(Outbox& outbox) const;
};

class VertexProgram {
 public:
  virtual ~VertexProgram() = default;

  virtual std::string name() const = 0;

  // Whole-input precondition check, run before round 1. Throws
  // PreconditionError.
  virtual void validate(const Graph& g) const;

  virtual std::unique_ptr<VertexProcess> spawn(const LocalView& view) const = 0;

  // True when processes accept corrupt().
  virtual bool has_ram() const { return false; }
};

}  // namespace bp::congest

#endif  // BP_CONGEST_PROGRAM_HPP_
