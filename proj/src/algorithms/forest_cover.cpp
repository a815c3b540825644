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
#include <vector>

#include "bp/algorithms/programs.hpp"

namespace bp {

using congest::BitReader;
using congest::BitWriter;
using congest::Inbox;
using congest::Outbox;
using congest::Status;
using congest::VertexOutput;

namespace {

constexpr unsigned kClaim = 1;
constexpr unsigned kAnnounce = 2;
constexpr unsigned kSelect = 3;

// Rounds 1 and 2 of the cover, shared by both programs.
class CoverState {
 public:
  explicit CoverState(const LocalView& view) : view_(view) {
    auto it = std::upper_bound(view.neighbors.begin(), view.neighbors.end(), view.id);
    if (it != view.neighbors.end()) greater_ = *it;
  }

  void round1(Outbox& outbox) {
    if (greater_) {
      parent_ = greater_;
      outbox.send(*greater_, congest::tag_message(kClaim));
    }
  }

  // Claims sent in round 1 arrive now.
  void round2(const Inbox& inbox) {
    for (const auto& e : inbox) {
      if (BitReader(e.message).tag() == kClaim) claimed_by_.push_back(e.peer);
    }
    if (!greater_ && claimed_by_.empty() && !view_.neighbors.empty()) {
      parent_ = view_.neighbors.back();
    }
  }

  bool isolated() const { return view_.neighbors.empty(); }
  std::optional<VertexId> parent() const { return parent_; }
  const LocalView& view() const { return view_; }

 private:
  LocalView view_;
  std::optional<VertexId> greater_;
  std::optional<VertexId> parent_;
  std::vector<VertexId> claimed_by_;
};

class ForestCoverProcess : public VertexProcess {
 public:
  explicit ForestCoverProcess(const LocalView& view) : cover_(view) {}

  Status step(std::uint32_t round, const Inbox& inbox, Outbox& outbox) override {
    if (round == 1) {
      cover_.round1(outbox);
      return Status::kRunning;
    }
    cover_.round2(inbox);
    return Status::kHalted;
  }

  VertexOutput output() const override {
    VertexOutput out;
    out.parent = cover_.parent();
    if (cover_.isolated()) out.aux["coverless"] = 1;
    return out;
  }

 private:
  CoverState cover_;
};

class GeneralBpProcess : public VertexProcess {
 public:
  explicit GeneralBpProcess(const LocalView& view) : cover_(view) {}

  Status step(std::uint32_t round, const Inbox& inbox, Outbox& outbox) override {
    const LocalView& view = cover_.view();
    switch (round) {
      case 1:
        cover_.round1(outbox);
        return Status::kRunning;
      case 2:
        cover_.round2(inbox);
        if (cover_.isolated()) return Status::kHalted;
        outbox.send_all(view.neighbors, BitWriter()
                                            .tag(kAnnounce)
                                            .id(view.id, view.id_bits)
                                            .optional_id(cover_.parent(), view.id_bits)
                                            .finish());
        return Status::kRunning;
      case 3:
        choose(inbox);
        outbox.send(*bp_, congest::tag_message(kSelect));
        return Status::kRunning;
      default:
        load_ = 0;
        for (const auto& e : inbox) {
          if (BitReader(e.message).tag() == kSelect) ++*load_;
        }
        return Status::kHalted;
    }
  }

  VertexOutput output() const override {
    VertexOutput out;
    out.parent = cover_.parent();
    out.bp = bp_;
    out.reported_load = load_;
    if (cover_.isolated()) {
      out.aux["coverless"] = 1;
      out.reported_load = 0;
    }
    return out;
  }

 private:
  void choose(const Inbox& inbox) {
    const LocalView& view = cover_.view();
    const auto parent = cover_.parent();
    std::optional<VertexId> child;
    std::optional<VertexId> sibling;
    for (const auto& e : inbox) {
      BitReader r(e.message);
      if (r.tag() != kAnnounce) continue;
      r.id(view.id_bits);
      const auto their_parent = r.optional_id(view.id_bits);
      if (their_parent == view.id && !child) child = e.peer;
      // Ascending inbox: the last hit is the closest smaller ID.
      if (parent && their_parent == parent && e.peer < view.id) sibling = e.peer;
    }
    if (child) {
      bp_ = child;
    } else if (sibling) {
      bp_ = sibling;
    } else {
      bp_ = parent;
    }
  }

  CoverState cover_;
  std::optional<VertexId> bp_;
  std::optional<std::uint64_t> load_;
};

}  // namespace

std::unique_ptr<VertexProcess> ForestCoverProgram::spawn(const LocalView& view) const {
  return std::make_unique<ForestCoverProcess>(view);
}

std::unique_ptr<VertexProcess> GeneralBp::spawn(const LocalView& view) const {
  return std::make_unique<GeneralBpProcess>(view);
}

}  // namespace bp
