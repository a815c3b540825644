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

#include <algorithm>
#include <string>
#include <vector>

#include "bp/algorithms/programs.hpp"
#include "bp/graph/structure.hpp"

namespace bp {

using congest::BitReader;
using congest::BitWriter;
using congest::Inbox;
using congest::Outbox;
using congest::Status;
using congest::VertexOutput;

namespace {

constexpr unsigned kSelect = 1;
constexpr unsigned kReport = 2;
constexpr unsigned kDecision = 3;

void check_orientation(const Graph& g,
                       const std::map<VertexId, std::optional<VertexId>>& parent) {
  if (!is_forest(g)) throw PreconditionError("input is not a forest");
  for (VertexId v : g.vertices()) {
    auto it = parent.find(v);
    if (it == parent.end()) {
      throw PreconditionError("vertex " + std::to_string(v) + " has no orientation");
    }
    if (it->second && !g.has_edge(v, *it->second)) {
      throw PreconditionError("parent of " + std::to_string(v) + " is not a neighbor");
    }
  }
}

std::vector<VertexId> children_of(const LocalView& view, std::optional<VertexId> parent) {
  std::vector<VertexId> out;
  for (VertexId u : view.neighbors) {
    if (!parent || u != *parent) out.push_back(u);
  }
  return out;
}

class TreeBpProcess : public VertexProcess {
 public:
  TreeBpProcess(const LocalView& view, std::optional<VertexId> parent)
      : parent_(parent), children_(children_of(view, parent)) {}

  Status step(std::uint32_t round, const Inbox& inbox, Outbox& outbox) override {
    if (round == 1) {
      if (!children_.empty()) {
        bp_ = children_.front();
      } else {
        bp_ = parent_;
      }
      if (!bp_) return Status::kHalted;
      outbox.send(*bp_, congest::tag_message(kSelect));
      return Status::kRunning;
    }
    load_ = inbox.size();
    return Status::kHalted;
  }

  VertexOutput output() const override {
    VertexOutput out;
    out.bp = bp_;
    out.parent = parent_;
    if (load_) {
      out.reported_load = *load_;
    } else if (!bp_ && !parent_ && children_.empty()) {
      out.reported_load = 0;
      out.aux["isolated"] = 1;
    }
    return out;
  }

 private:
  std::optional<VertexId> parent_;
  std::vector<VertexId> children_;
  std::optional<VertexId> bp_;
  std::optional<std::uint64_t> load_;
};

class OptimalTreeProcess : public VertexProcess {
 public:
  OptimalTreeProcess(const LocalView& view, std::optional<VertexId> parent,
                     std::uint64_t t)
      : parent_(parent), children_(children_of(view, parent)), t_(t) {}

  Status step(std::uint32_t, const Inbox& inbox, Outbox& outbox) override {
    for (const auto& e : inbox) {
      BitReader r(e.message);
      const unsigned tag = r.tag();
      if (tag == kReport) {
        const bool selects_me = r.flag();
        const bool spare = r.flag();
        reports_[e.peer] = {selects_me, spare};
      } else if (tag == kDecision) {
        parent_selected_me_ = r.flag();
      }
    }

    if (!decided_ && reports_.size() == children_.size()) decide(outbox);

    if (!decided_) return Status::kRunning;
    if (parent_ && !parent_selected_me_) return Status::kRunning;
    load_ = from_children_ + (parent_selected_me_.value_or(false) ? 1 : 0);
    return Status::kHalted;
  }

  VertexOutput output() const override {
    VertexOutput out;
    out.parent = parent_;
    out.bp = bp_;
    out.reported_load = load_;
    return out;
  }

 private:
  void decide(Outbox& outbox) {
    decided_ = true;
    for (const auto& [c, r] : reports_) {
      if (r.first) ++from_children_;
    }
    for (const auto& [c, r] : reports_) {
      if (r.second) {
        bp_ = c;
        break;
      }
    }
    if (!bp_) bp_ = parent_;
    if (!bp_ && !children_.empty()) bp_ = children_.front();

    const bool selects_parent = parent_ && bp_ == parent_;
    if (parent_) {
      const bool spare = from_children_ + 1 <= t_;
      outbox.send(*parent_,
                  BitWriter().tag(kReport).flag(selects_parent).flag(spare).finish());
    }
    for (VertexId c : children_) {
      outbox.send(c, BitWriter().tag(kDecision).flag(bp_ == c).finish());
    }
  }

  std::optional<VertexId> parent_;
  std::vector<VertexId> children_;
  std::uint64_t t_;
  std::map<VertexId, std::pair<bool, bool>> reports_;
  bool decided_ = false;
  std::uint64_t from_children_ = 0;
  std::optional<bool> parent_selected_me_;
  std::optional<VertexId> bp_;
  std::optional<std::uint64_t> load_;
};

}  // namespace

void TreeBp::validate(const Graph& g) const { check_orientation(g, parent_); }

std::unique_ptr<VertexProcess> TreeBp::spawn(const LocalView& view) const {
  return std::make_unique<TreeBpProcess>(view, parent_.at(view.id));
}

void OptimalTreeBp::validate(const Graph& g) const {
  if (t_ < 1) throw InvalidParameter("t must be >= 1");
  check_orientation(g, parent_);
}

std::unique_ptr<VertexProcess> OptimalTreeBp::spawn(const LocalView& view) const {
  return std::make_unique<OptimalTreeProcess>(view, parent_.at(view.id), t_);
}

}  // namespace bp
