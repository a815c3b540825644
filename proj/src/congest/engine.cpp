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

#include "bp/congest/engine.hpp"

#include <algorithm>
#include <cstdio>
#include <memory>
#include <stdexcept>

#include "bp/congest/fingerprint.hpp"
#include "bp/graph/random.hpp"

namespace bp::congest {

std::string to_hex(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

std::size_t bit_budget(std::size_t n, std::uint32_t beta) {
  return static_cast<std::size_t>(beta) * ceil_log2(n) + 8;
}

namespace {

std::vector<RamField> fields_of(const Fault& fault) {
  if (fault.field == "Parent") return {RamField::kParent};
  if (fault.field == "BP") return {RamField::kBp};
  if (fault.field == "all") return {RamField::kParent, RamField::kBp};
  throw ConfigError("fault targets '" + fault.field +
                    "', which is not a RAM field (Parent, BP, all)");
}

std::optional<VertexId> fault_value(const Fault& fault, VertexId vertex,
                                    RamField field, unsigned id_bits) {
  switch (fault.kind) {
    case Fault::Value::kNull:
      return std::nullopt;
    case Fault::Value::kFixed:
      return fault.fixed;
    case Fault::Value::kRandom: {
      Fnv64 h;
      h.u64(fault.random_seed).u64(fault.round).u64(vertex).u64(
          field == RamField::kParent ? 1 : 2);
      Rng rng(h.value());
      // Any register content: every w-bit pattern plus NULL.
      const std::uint64_t patterns = std::uint64_t{1} << id_bits;
      const std::uint64_t x = rng.below(patterns + 1);
      if (x == patterns) return std::nullopt;
      return static_cast<VertexId>(x);
    }
  }
  return std::nullopt;
}

class Runner {
 public:
  Runner(const Graph& g, const VertexProgram& program, const EngineConfig& config)
      : g_(g), program_(program), config_(config) {}

  RunTranscript execute(std::uint32_t limit, const RoundObserver& observer) {
    check_config();
    program_.validate(g_);

    const std::size_t n = g_.num_vertices();
    RunTranscript t;
    t.program = program_.name();
    t.bit_budget = bit_budget(n, config_.beta);
    if (config_.record_vertex_log) t.vertex_log.emplace();
    hash_.str(t.program).u64(n);

    processes_.reserve(n);
    for (VertexId v : g_.vertices()) {
      LocalView view;
      view.id = v;
      const auto nbrs = g_.neighbors(v);
      view.neighbors.assign(nbrs.begin(), nbrs.end());
      view.id_bits = g_.id_bits();
      view.n = n;
      processes_.push_back(program_.spawn(view));
    }

    std::vector<Inbox> current(n), next(n);
    std::vector<bool> halted(n, false);
    std::size_t running = n;

    for (std::uint32_t round = 1; round <= limit && running > 0; ++round) {
      RoundStats stats;
      stats.round = round;
      for (std::size_t i = 0; i < n; ++i) {
        if (halted[i]) continue;
        Outbox outbox;
        const Status status = processes_[i]->step(round, current[i], outbox);
        Fnv64 sent;
        for (const Envelope& e : outbox.entries()) {
          deliver(round, g_.vertices()[i], e, next, stats, t);
          sent.u64(e.peer).u64(e.message.bit_length());
        }
        if (t.vertex_log) {
          Fnv64 received;
          for (const Envelope& e : current[i]) {
            received.u64(e.peer).u64(e.message.bit_length());
          }
          t.vertex_log->push_back(
              {round, g_.vertices()[i], sent.value(), received.value()});
        }
        if (status == Status::kHalted) {
          halted[i] = true;
          --running;
        }
      }
      for (auto& inbox : current) inbox.clear();
      std::swap(current, next);

      apply_faults(round, current, stats, t);

      t.per_round_bits.push_back(stats);
      t.rounds_executed = round;
      if (observer) observer(round, snapshot());
    }

    t.halted = running == 0;
    t.outputs = snapshot();
    for (const auto& [v, out] : t.outputs) {
      hash_.u64(v);
      hash_.u64(out.bp ? *out.bp + 1ULL : 0).u64(out.parent ? *out.parent + 1ULL : 0);
      hash_.u64(out.level ? *out.level + 1ULL : 0);
      hash_.u64(out.reported_load ? *out.reported_load + 1ULL : 0);
      for (const auto& [k, val] : out.aux) hash_.str(k).u64(static_cast<std::uint64_t>(val));
    }
    hash_.u64(t.rounds_executed).u64(t.halted ? 1 : 0);
    t.fingerprint = hash_.value();
    return t;
  }

 private:
  void check_config() const {
    if (config_.beta < 1) throw ConfigError("beta must be >= 1");
    if (config_.max_rounds < 1) throw ConfigError("max_rounds must be >= 1");
    if (g_.empty()) throw ConfigError("graph has no vertices");
    for (const Fault& f : config_.fault_plan) {
      fields_of(f);
      if (!program_.has_ram()) {
        throw ConfigError("program '" + program_.name() + "' has no RAM fields");
      }
      if (f.vertex && !g_.contains(*f.vertex)) {
        throw ConfigError("fault names unknown vertex " + std::to_string(*f.vertex));
      }
      if (f.kind == Fault::Value::kFixed && f.fixed > 0 &&
          ceil_log2(static_cast<std::uint64_t>(f.fixed) + 1) > g_.id_bits()) {
        throw ConfigError("fault value " + std::to_string(f.fixed) +
                          " does not fit in an ID register");
      }
      if (f.round < 1) throw ConfigError("fault round must be >= 1");
    }
  }

  void deliver(std::uint32_t round, VertexId from, const Envelope& e,
               std::vector<Inbox>& next, RoundStats& stats, RunTranscript& t) {
    if (!g_.has_edge(from, e.peer)) throw LocalityViolation(round, from, e.peer);
    const std::size_t bits = e.message.bit_length();
    if (bits > t.bit_budget) {
      throw BudgetViolation(round, from, e.peer, bits, t.bit_budget);
    }
    ++stats.messages;
    stats.total_bits += bits;
    stats.max_bits = std::max(stats.max_bits, bits);
    t.max_message_bits = std::max(t.max_message_bits, bits);
    hash_.u64(round).u64(from).u64(e.peer).u64(bits);
    for (bool b : e.message.bits()) hash_.u64(b ? 1 : 0);
    // Senders are stepped in ascending ID order, so inboxes stay sorted.
    next[g_.index_of(e.peer)].push_back({from, e.message});
  }

  void apply_faults(std::uint32_t round, std::vector<Inbox>& inboxes,
                    RoundStats& stats, RunTranscript& t) {
    for (const Fault& f : config_.fault_plan) {
      if (f.round != round) continue;
      std::vector<VertexId> targets;
      if (f.vertex) {
        targets.push_back(*f.vertex);
      } else {
        targets.assign(g_.vertices().begin(), g_.vertices().end());
      }
      for (VertexId v : targets) {
        auto& process = processes_[g_.index_of(v)];
        for (RamField field : fields_of(f)) {
          const auto value = fault_value(f, v, field, g_.id_bits());
          process->corrupt(field, value);
          hash_.str("fault").u64(round).u64(v).u64(field == RamField::kParent ? 1 : 2);
          hash_.u64(value ? *value + 1ULL : 0);
        }
        Outbox replacement;
        process->restate(replacement);
        for (const Envelope& e : replacement.entries()) {
          if (!g_.has_edge(v, e.peer)) throw LocalityViolation(round, v, e.peer);
          const std::size_t bits = e.message.bit_length();
          if (bits > t.bit_budget) throw BudgetViolation(round, v, e.peer, bits, t.bit_budget);
          stats.max_bits = std::max(stats.max_bits, bits);
          t.max_message_bits = std::max(t.max_message_bits, bits);
          hash_.u64(round).u64(v).u64(e.peer).u64(bits);
          for (bool b : e.message.bits()) hash_.u64(b ? 1 : 0);
          Inbox& inbox = inboxes[g_.index_of(e.peer)];
          auto it = std::lower_bound(
              inbox.begin(), inbox.end(), v,
              [](const Envelope& x, VertexId id) { return x.peer < id; });
          if (it != inbox.end() && it->peer == v) {
            it->message = e.message;
          } else {
            inbox.insert(it, {v, e.message});
          }
        }
      }
    }
  }

  std::map<VertexId, VertexOutput> snapshot() const {
    std::map<VertexId, VertexOutput> out;
    for (std::size_t i = 0; i < processes_.size(); ++i) {
      out.emplace(g_.vertices()[i], processes_[i]->output());
    }
    return out;
  }

  const Graph& g_;
  const VertexProgram& program_;
  const EngineConfig& config_;
  std::vector<std::unique_ptr<VertexProcess>> processes_;
  Fnv64 hash_;
};

}  // namespace

RunTranscript run(const Graph& g, const VertexProgram& program,
                  const EngineConfig& config, const RoundObserver& observer) {
  return Runner(g, program, config).execute(config.max_rounds, observer);
}

RunTranscript run_with_round_limit(const Graph& g, const VertexProgram& program,
                                   const EngineConfig& config,
                                   std::uint32_t round_limit,
                                   const RoundObserver& observer) {
  if (round_limit < 1) throw ConfigError("round limit must be >= 1");
  return Runner(g, program, config)
      .execute(std::min(round_limit, config.max_rounds), observer);
}

}  // namespace bp::congest
