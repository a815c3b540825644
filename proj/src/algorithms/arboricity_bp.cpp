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
#include <set>
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

// Flag bits of the leading nibble.
constexpr unsigned kJoin = 8;
constexpr unsigned kUMember = 4;
constexpr unsigned kOffer = 2;
constexpr unsigned kLeft = 1;

// The core runs from this engine round on.
constexpr std::uint32_t kCoreStart = 3;

enum class Role { kUndecided, kPair, kU, kV };

class ArboricityProcess : public VertexProcess {
 public:
  ArboricityProcess(const LocalView& view, const detail::CoreShape& shape,
                    std::uint64_t a, std::uint32_t max_levels)
      : view_(view), shape_(shape), threshold_(3 * a), max_levels_(max_levels),
        active_degree_(view.neighbors.size()), u_(shape) {}

  Status step(std::uint32_t round, const Inbox& inbox, Outbox& outbox) override {
    std::map<VertexId, unsigned> flags;
    std::map<VertexId, std::uint64_t> masks;
    std::vector<VertexId> joined_now;
    std::vector<VertexId> u_members;
    std::vector<std::pair<VertexId, std::uint64_t>> offers;
    std::vector<std::uint64_t> lefts;
    for (const auto& e : inbox) {
      BitReader r(e.message);
      const unsigned f = r.tag();
      const std::uint64_t mask = (f & (kOffer | kLeft)) ? r.get(shape_.instances) : 0;
      if (f & kJoin) joined_now.push_back(e.peer);
      if (f & kUMember) u_members.push_back(e.peer);
      if (f & kOffer) offers.emplace_back(e.peer, mask);
      if (f & kLeft) lefts.push_back(mask);
    }

    if (view_.neighbors.empty()) {
      level_ = 1;
      role_ = Role::kPair;
      return Status::kHalted;
    }

    // Partition step; neighbors that joined before this round are lower.
    lower_.insert(joined_now.begin(), joined_now.end());
    if (!level_ && !stranded_) {
      active_degree_ -= joined_now.size();
      if (active_degree_ <= threshold_) {
        level_ = round;
        if (!lower_.empty()) bp_ = *lower_.begin();
        for (VertexId u : view_.neighbors) flags[u] |= kJoin;
      } else if (round >= max_levels_) {
        stranded_ = true;
      }
    }

    if (round == 2) {
      if (level_ == 1u) {
        std::optional<VertexId> mate;
        for (VertexId u : joined_now) {
          if (!mate) mate = u;
        }
        if (mate) {
          role_ = Role::kPair;
          bp_ = mate;
        } else {
          role_ = Role::kU;
          for (VertexId u : view_.neighbors) flags[u] |= kUMember;
        }
      } else {
        role_ = Role::kV;
      }
    }

    if (round >= kCoreStart) {
      const std::uint32_t core_round = round - kCoreStart + 1;
      const std::uint32_t phase = (core_round + 1) / 2;
      if (role_ == Role::kV) {
        if (round == kCoreStart) {
          partners_ = u_members;
          v_.emplace(shape_, partners_.size());
        }
        if (core_round % 2 == 1) {
          const std::uint64_t offer = v_->offer(phase, lefts);
          if (offer != 0) {
            for (VertexId u : partners_) {
              flags[u] |= kOffer;
              masks[u] = offer;
            }
          }
        }
      } else if (role_ == Role::kU && core_round % 2 == 0) {
        const std::uint64_t left = u_.select(phase, offers);
        if (left != 0) {
          for (VertexId u : view_.neighbors) {
            flags[u] |= kLeft;
            masks[u] = left;
          }
        }
      }
    }

    for (const auto& [to, f] : flags) {
      BitWriter w;
      w.tag(f);
      if (f & (kOffer | kLeft)) w.put(masks[to], shape_.instances);
      outbox.send(to, w.finish());
    }
    return finished() ? Status::kHalted : Status::kRunning;
  }

  VertexOutput output() const override {
    VertexOutput out;
    out.level = level_;
    out.bp = bp_;
    if (stranded_) out.aux["stranded"] = 1;
    if (view_.neighbors.empty()) out.aux["isolated"] = 1;
    switch (role_) {
      case Role::kUndecided: break;
      case Role::kPair: out.aux["role"] = 0; break;
      case Role::kU:
        out.aux["role"] = 1;
        out.bp = u_.choice();
        if (out.bp) {
          out.aux["selected_phase"] = *u_.choice_phase();
          out.aux["instance"] = *u_.choice_instance();
        } else {
          out.aux["unmatched"] = 1;
        }
        break;
      case Role::kV: out.aux["role"] = 2; break;
    }
    return out;
  }

 private:
  bool finished() const {
    const bool partition_done = level_.has_value() || stranded_;
    switch (role_) {
      case Role::kUndecided: return false;
      case Role::kPair: return true;
      case Role::kU: return u_.done();
      case Role::kV: return partition_done && v_ && v_->done();
    }
    return false;
  }

  LocalView view_;
  detail::CoreShape shape_;
  std::uint64_t threshold_;
  std::uint32_t max_levels_;
  std::uint64_t active_degree_;
  std::set<VertexId> lower_;
  std::optional<std::uint32_t> level_;
  bool stranded_ = false;
  Role role_ = Role::kUndecided;
  std::optional<VertexId> bp_;
  std::vector<VertexId> partners_;
  detail::UCore u_;
  std::optional<detail::VCore> v_;
};

}  // namespace

void ArboricityBp::validate(const Graph& g) const {
  if (params_.a < 1) throw InvalidParameter("a must be >= 1");
  if (params_.mode == BipartiteMode::kKnownT && (!params_.t || *params_.t < 1)) {
    throw InvalidParameter("known_t mode needs t >= 1");
  }
  if (params_.mode == BipartiteMode::kDoubling) {
    throw InvalidParameter("arboricity-bp runs in parallel or known_t mode");
  }
  if (params_.n_estimate != 0 && params_.n_estimate < g.num_vertices()) {
    throw InvalidParameter("n_estimate is below n");
  }
}

std::unique_ptr<VertexProcess> ArboricityBp::spawn(const LocalView& view) const {
  const std::uint64_t n = params_.n_estimate ? params_.n_estimate : view.n;
  const auto shape = detail::CoreShape::make(params_.mode, 3 * params_.a, params_.t, n);
  return std::make_unique<ArboricityProcess>(view, shape, params_.a,
                                             2 * ceil_log2(n) + 1);
}

}  // namespace bp
