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

#ifndef BP_ALGORITHMS_PROGRAMS_HPP_
#define BP_ALGORITHMS_PROGRAMS_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "bp/congest/program.hpp"
#include "bp/graph/graph.hpp"

namespace bp {

using congest::LocalView;
using congest::VertexProcess;
using congest::VertexProgram;

// Every vertex selects its smallest child, leaves their parent. Round 2
// counts the selections received. Outputs: bp, parent, reported_load; an
// isolated vertex reports aux "isolated" and no bp.
// Wire: 4-bit tag.
class TreeBp : public VertexProgram {
 public:
  explicit TreeBp(std::map<VertexId, std::optional<VertexId>> parent)
      : parent_(std::move(parent)) {}
  std::string name() const override { return "tree-bp"; }
  void validate(const Graph& g) const override;
  std::unique_ptr<VertexProcess> spawn(const LocalView& view) const override;

 private:
  std::map<VertexId, std::optional<VertexId>> parent_;
};

// Convergecast for a known target load t. A vertex decides once every child
// has reported: it selects its smallest child that can still take one more
// selector without exceeding t, otherwise its parent (a root without such a
// child takes its smallest child). Reports upward whether it selected its
// parent and whether it has spare capacity, then tells each child whether it
// was selected. Height-h roots decide in round h+1.
// Outputs: bp, parent, reported_load. Wire: 4-bit tag + 2 bits.
class OptimalTreeBp : public VertexProgram {
 public:
  OptimalTreeBp(std::map<VertexId, std::optional<VertexId>> parent, std::uint64_t t)
      : parent_(std::move(parent)), t_(t) {}
  std::string name() const override { return "optimal-tree-bp"; }
  void validate(const Graph& g) const override;
  std::unique_ptr<VertexProcess> spawn(const LocalView& view) const override;

 private:
  std::map<VertexId, std::optional<VertexId>> parent_;
  std::uint64_t t_;
};

// Round 1: every vertex with a greater neighbor claims the smallest one as
// parent. Round 2: a vertex with no greater neighbor is a root if it was
// claimed and otherwise adopts its largest neighbor. Outputs: parent; an
// isolated vertex reports aux "coverless".
// Wire: 4-bit tag.
class ForestCoverProgram : public VertexProgram {
 public:
  std::string name() const override { return "forest-cover"; }
  std::unique_ptr<VertexProcess> spawn(const LocalView& view) const override;
};

// Forest cover as above; in round 2 every vertex announces (ID, parent).
// Round 3: a vertex with children selects the smallest; otherwise the
// largest smaller-ID neighbor sharing its parent; otherwise its parent.
// Round 4: selections are counted. Outputs: bp, parent, reported_load.
// Wire: 4-bit tag, or tag + ID + presence bit + ID.
class GeneralBp : public VertexProgram {
 public:
  std::string name() const override { return "general-bp"; }
  std::unique_ptr<VertexProcess> spawn(const LocalView& view) const override;
};

enum class BipartiteMode { kKnownT, kDoubling, kParallel };

std::string to_string(BipartiteMode mode);
BipartiteMode parse_bipartite_mode(const std::string& text);

struct BipartiteParams {
  std::uint64_t a = 1;
  std::optional<std::uint64_t> t;
  BipartiteMode mode = BipartiteMode::kParallel;
  // Upper bound on n known to every vertex; 0 means the exact n.
  std::uint64_t n_estimate = 0;
};

// Offer/select phases on the sides recorded in the graph metadata. Rounds
// 2p-1 and 2p form phase p: active V-vertices whose active degree is at
// most the threshold offer and retire, then every U-vertex holding offers
// takes the smallest offering ID and tells all its V-neighbors it left.
// Each V-vertex also selects its smallest U-neighbor in round 1.
//
// Outputs: bp for both sides; U: aux side=0, selected_phase, instance,
// unmatched; V: side=1, removed_phase, exempt, and for instance 0 the
// active degree seen at the start of the latest phase (phase,
// phase_degree; -1 when inactive).
// Wire: 4-bit tag + one bit per instance.
class BipartiteBp : public VertexProgram {
 public:
  BipartiteBp(BipartiteParams params, std::set<VertexId> u_side)
      : params_(params), u_side_(std::move(u_side)) {}
  std::string name() const override;
  void validate(const Graph& g) const override;
  std::unique_ptr<VertexProcess> spawn(const LocalView& view) const override;

  const BipartiteParams& params() const { return params_; }

 private:
  BipartiteParams params_;
  std::set<VertexId> u_side_;
};

// Peeling with threshold 3a: in round i every active vertex whose active
// degree is at most 3a joins level i, tells its neighbors and halts.
// Vertices still active after 2*ceil(log2 n)+1 rounds halt with aux
// "stranded" and no level. Outputs: level. Wire: 4-bit tag.
class ProcedurePartition : public VertexProgram {
 public:
  ProcedurePartition(std::uint64_t a, std::uint64_t n_estimate)
      : a_(a), n_estimate_(n_estimate) {}
  std::string name() const override { return "procedure-partition"; }
  void validate(const Graph& g) const override;
  std::unique_ptr<VertexProcess> spawn(const LocalView& view) const override;

 private:
  std::uint64_t a_;
  std::uint64_t n_estimate_;
};

// Partition, level-based selections and the offer/select core on
// (H_1 vertices without H_1 neighbors, everything above H_1) run
// concurrently. Round 1 builds H_1; in round 2 H_1 vertices either select
// their smallest H_1 neighbor or announce U-membership; the core starts in
// round 3 with degree bound 3a. A vertex at level > 1 selects its smallest
// lower-level neighbor when it joins. Outputs: bp, level, aux role
// (0 = H_1 pair, 1 = U, 2 = V). Wire: 4-bit flag set + instance mask.
class ArboricityBp : public VertexProgram {
 public:
  explicit ArboricityBp(BipartiteParams params) : params_(params) {}
  std::string name() const override { return "arboricity-bp"; }
  void validate(const Graph& g) const override;
  std::unique_ptr<VertexProcess> spawn(const LocalView& view) const override;

 private:
  BipartiteParams params_;
};

// Self-stabilizing backup placement. RAM: Parent, BP; both start NULL.
// Every round each vertex recomputes Parent from its ID, its neighbors' IDs
// and the previous round's claims, then BP from the previous round's
// announcements, and broadcasts (ID, Parent). Never halts.
// Outputs: parent, bp. Wire: tag + ID + presence bit + ID.
class SelfStabBp : public VertexProgram {
 public:
  std::string name() const override { return "self-stab"; }
  std::unique_ptr<VertexProcess> spawn(const LocalView& view) const override;
  bool has_ram() const override { return true; }
};

}  // namespace bp

#endif  // BP_ALGORITHMS_PROGRAMS_HPP_
