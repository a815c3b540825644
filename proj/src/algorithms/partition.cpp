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

#include "bp/algorithms/programs.hpp"

namespace bp {

using congest::Inbox;
using congest::Outbox;
using congest::Status;
using congest::VertexOutput;

namespace {

constexpr unsigned kJoin = 1;

class PartitionProcess : public VertexProcess {
 public:
  PartitionProcess(const LocalView& view, std::uint64_t a, std::uint32_t max_levels)
      : view_(view), threshold_(3 * a), max_levels_(max_levels),
        active_degree_(view.neighbors.size()) {}

  Status step(std::uint32_t round, const Inbox& inbox, Outbox& outbox) override {
    for (const auto& e : inbox) {
      if (congest::BitReader(e.message).tag() == kJoin) --active_degree_;
    }
    if (active_degree_ <= threshold_) {
      level_ = round;
      outbox.send_all(view_.neighbors, congest::tag_message(kJoin));
      return Status::kHalted;
    }
    if (round >= max_levels_) {
      stranded_ = true;
      return Status::kHalted;
    }
    return Status::kRunning;
  }

  VertexOutput output() const override {
    VertexOutput out;
    out.level = level_;
    if (stranded_) out.aux["stranded"] = 1;
    return out;
  }

 private:
  LocalView view_;
  std::uint64_t threshold_;
  std::uint32_t max_levels_;
  std::uint64_t active_degree_;
  std::optional<std::uint32_t> level_;
  bool stranded_ = false;
};

}  // namespace

void ProcedurePartition::validate(const Graph& g) const {
  if (a_ < 1) throw InvalidParameter("a must be >= 1");
  if (n_estimate_ != 0 && n_estimate_ < g.num_vertices()) {
    throw InvalidParameter("n_estimate is below n");
  }
}

std::unique_ptr<VertexProcess> ProcedurePartition::spawn(const LocalView& view) const {
  const std::uint64_t n = n_estimate_ ? n_estimate_ : view.n;
  const std::uint32_t max_levels = 2 * ceil_log2(n) + 1;
  return std::make_unique<PartitionProcess>(view, a_, max_levels);
}

}  // namespace bp
