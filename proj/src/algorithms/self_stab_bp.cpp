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

#include "bp/algorithms/programs.hpp"

namespace bp {

using congest::BitReader;
using congest::BitWriter;
using congest::Inbox;
using congest::Outbox;
using congest::RamField;
using congest::Status;
using congest::VertexOutput;

namespace {

constexpr unsigned kState = 1;

class SelfStabProcess : public VertexProcess {
 public:
  explicit SelfStabProcess(const LocalView& view) : view_(view) {
    auto it = std::upper_bound(view.neighbors.begin(), view.neighbors.end(), view.id);
    if (it != view.neighbors.end()) greater_ = *it;
  }

  Status step(std::uint32_t, const Inbox& inbox, Outbox& outbox) override {
    std::optional<VertexId> first_claim;
    std::vector<std::pair<VertexId, std::optional<VertexId>>> announced;
    for (const auto& e : inbox) {
      BitReader r(e.message);
      if (r.tag() != kState) continue;
      r.id(view_.id_bits);
      const auto their_parent = r.optional_id(view_.id_bits);
      announced.emplace_back(e.peer, their_parent);
      if (their_parent == view_.id && !first_claim) first_claim = e.peer;
    }

    if (greater_) {
      parent_ = greater_;
    } else if (first_claim || view_.neighbors.empty()) {
      parent_.reset();
    } else {
      parent_ = view_.neighbors.back();
    }

    std::optional<VertexId> sibling;
    for (const auto& [u, p] : announced) {
      if (parent_ && p == parent_ && u < view_.id) sibling = u;
    }
    if (first_claim) {
      bp_ = first_claim;
    } else if (sibling) {
      bp_ = sibling;
    } else {
      bp_ = parent_;
    }

    restate(outbox);
    return Status::kRunning;
  }

  VertexOutput output() const override {
    VertexOutput out;
    out.parent = parent_;
    out.bp = bp_;
    return out;
  }

  void corrupt(RamField field, std::optional<VertexId> value) override {
    if (field == RamField::kParent) {
      parent_ = value;
    } else {
      bp_ = value;
    }
  }

  void restate(Outbox& outbox) const override {
    if (view_.neighbors.empty()) return;
    outbox.send_all(view_.neighbors, BitWriter()
                                         .tag(kState)
                                         .id(view_.id, view_.id_bits)
                                         .optional_id(parent_, view_.id_bits)
                                         .finish());
  }

 private:
  LocalView view_;
  std::optional<VertexId> greater_;
  std::optional<VertexId> parent_;
  std::optional<VertexId> bp_;
};

}  // namespace

std::unique_ptr<VertexProcess> SelfStabBp::spawn(const LocalView& view) const {
  return std::make_unique<SelfStabProcess>(view);
}

}  // namespace bp
