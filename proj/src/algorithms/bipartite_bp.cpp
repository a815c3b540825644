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
#include "offer_select.hpp"

namespace bp {

using congest::BitReader;
using congest::BitWriter;
using congest::Inbox;
using congest::Outbox;
using congest::Status;
using congest::VertexOutput;

namespace {

constexpr unsigned kOffer = 1;
constexpr unsigned kLeft = 2;

class BipartiteProcess : public VertexProcess {
 public:
  BipartiteProcess(const LocalView& view, const detail::CoreShape& shape, bool in_u)
      : view_(view), shape_(shape), in_u_(in_u), u_(shape), v_(shape, view.neighbors.size()) {}

  Status step(std::uint32_t round, const Inbox& inbox, Outbox& outbox) override {
    const std::uint32_t phase = (round + 1) / 2;
    if (view_.neighbors.empty()) return Status::kHalted;
    if (in_u_) {
      if (round % 2 == 1) return Status::kRunning;
      std::vector<std::pair<VertexId, std::uint64_t>> offers;
      for (const auto& e : inbox) {
        BitReader r(e.message);
        if (r.tag() == kOffer) offers.emplace_back(e.peer, r.get(shape_.instances));
      }
      const std::uint64_t left = u_.select(phase, offers);
      if (left != 0) outbox.send_all(view_.neighbors, mask_message(kLeft, left));
      return u_.done() ? Status::kHalted : Status::kRunning;
    }

    if (round == 1) own_pick_ = view_.neighbors.front();
    if (round % 2 == 0) return Status::kRunning;
    std::vector<std::uint64_t> left;
    for (const auto& e : inbox) {
      BitReader r(e.message);
      if (r.tag() == kLeft) left.push_back(r.get(shape_.instances));
    }
    const std::uint64_t offer = v_.offer(phase, left);
    if (offer != 0) outbox.send_all(view_.neighbors, mask_message(kOffer, offer));
    return v_.done() ? Status::kHalted : Status::kRunning;
  }

  VertexOutput output() const override {
    VertexOutput out;
    if (in_u_) {
      out.aux["side"] = 0;
      out.bp = u_.choice();
      if (out.bp) {
        out.aux["selected_phase"] = *u_.choice_phase();
        out.aux["instance"] = *u_.choice_instance();
      } else {
        out.aux["unmatched"] = 1;
      }
      return out;
    }
    out.aux["side"] = 1;
    out.bp = own_pick_;
    if (view_.neighbors.empty()) out.aux["exempt"] = 1;
    if (v_.removed_phase()) out.aux["removed_phase"] = *v_.removed_phase();
    if (v_.last_phase() > 0) {
      out.aux["phase"] = v_.last_phase();
      out.aux["phase_degree"] = v_.last_phase_degree();
    }
    return out;
  }

 private:
  congest::Message mask_message(unsigned tag, std::uint64_t mask) const {
    return BitWriter().tag(tag).put(mask, shape_.instances).finish();
  }

  LocalView view_;
  detail::CoreShape shape_;
  bool in_u_;
  detail::UCore u_;
  detail::VCore v_;
  std::optional<VertexId> own_pick_;
};

}  // namespace

std::string to_string(BipartiteMode mode) {
  switch (mode) {
    case BipartiteMode::kKnownT: return "known_t";
    case BipartiteMode::kDoubling: return "doubling";
    case BipartiteMode::kParallel: return "parallel";
  }
  return "";
}

BipartiteMode parse_bipartite_mode(const std::string& text) {
  if (text == "known_t" || text == "known") return BipartiteMode::kKnownT;
  if (text == "doubling") return BipartiteMode::kDoubling;
  if (text == "parallel") return BipartiteMode::kParallel;
  throw InvalidParameter("unknown mode '" + text + "' (known_t, doubling, parallel)");
}

std::string BipartiteBp::name() const {
  switch (params_.mode) {
    case BipartiteMode::kKnownT: return "bipartite-known";
    case BipartiteMode::kDoubling: return "bipartite-doubling";
    case BipartiteMode::kParallel: return "bipartite-parallel";
  }
  return "bipartite";
}

void BipartiteBp::validate(const Graph& g) const {
  if (params_.a < 1) throw InvalidParameter("a must be >= 1");
  if (params_.mode == BipartiteMode::kKnownT && (!params_.t || *params_.t < 1)) {
    throw InvalidParameter("known_t mode needs t >= 1");
  }
  if (params_.n_estimate != 0 && params_.n_estimate < g.num_vertices()) {
    throw InvalidParameter("n_estimate is below n");
  }
  for (VertexId u : u_side_) {
    if (!g.contains(u)) {
      throw PreconditionError("U-side vertex " + std::to_string(u) + " is not in the graph");
    }
  }
  for (const Edge& e : g.edges()) {
    if (u_side_.contains(e.u) == u_side_.contains(e.v)) {
      throw PreconditionError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                              " does not cross the sides; input is not bipartite");
    }
  }
  for (VertexId u : u_side_) {
    if (g.degree(u) > params_.a) {
      throw PreconditionError("U-vertex " + std::to_string(u) + " has degree " +
                              std::to_string(g.degree(u)) + " > a = " +
                              std::to_string(params_.a));
    }
  }
}

std::unique_ptr<VertexProcess> BipartiteBp::spawn(const LocalView& view) const {
  const std::uint64_t n_est = params_.n_estimate ? params_.n_estimate : view.n;
  const auto shape = detail::CoreShape::make(params_.mode, params_.a, params_.t, n_est);
  return std::make_unique<BipartiteProcess>(view, shape, u_side_.contains(view.id));
}

}  // namespace bp
