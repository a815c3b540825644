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

#ifndef BP_SRC_ALGORITHMS_OFFER_SELECT_HPP_
#define BP_SRC_ALGORITHMS_OFFER_SELECT_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "bp/algorithms/programs.hpp"

namespace bp::detail {

// Shape of one offer/select run, identical at every vertex.
struct CoreShape {
  BipartiteMode mode = BipartiteMode::kParallel;
  std::uint64_t degree_bound = 1;  // a, or 3a inside arboricity_bp
  std::uint64_t t = 1;             // known_t only
  std::uint32_t phases_per_run = 1;
  std::uint32_t instances = 1;
  std::uint32_t phase_cap = 1;

  static CoreShape make(BipartiteMode mode, std::uint64_t degree_bound,
                        std::optional<std::uint64_t> t, std::uint64_t n_estimate);

  std::uint64_t threshold(std::uint32_t instance, std::uint32_t phase) const;
};

// V side. Call offer() once per phase with the LEFT masks received since the
// previous call; it returns the instances this vertex offers in.
class VCore {
 public:
  VCore(const CoreShape& shape, std::uint64_t degree);

  std::uint64_t offer(std::uint32_t phase, const std::vector<std::uint64_t>& left);
  bool done() const { return done_; }

  // Instance-0 bookkeeping, for phase-halving checks.
  std::optional<std::uint32_t> removed_phase() const { return removed_phase_; }
  std::uint32_t last_phase() const { return last_phase_; }
  std::int64_t last_phase_degree() const { return last_phase_degree_; }

 private:
  CoreShape shape_;
  std::vector<std::uint64_t> degree_;
  std::vector<bool> active_;
  bool done_ = false;
  std::optional<std::uint32_t> removed_phase_;
  std::uint32_t last_phase_ = 0;
  std::int64_t last_phase_degree_ = -1;
};

// U side. select() takes the (sender, mask) offers of one phase, ascending
// by sender, and returns the mask of instances it just left.
class UCore {
 public:
  explicit UCore(const CoreShape& shape);

  std::uint64_t select(std::uint32_t phase,
                       const std::vector<std::pair<VertexId, std::uint64_t>>& offers);
  bool done() const { return done_; }

  // Selection of the smallest matched instance.
  std::optional<VertexId> choice() const;
  std::optional<std::uint32_t> choice_instance() const;
  std::optional<std::uint32_t> choice_phase() const;

 private:
  CoreShape shape_;
  std::vector<std::optional<VertexId>> selection_;
  std::vector<std::uint32_t> phase_;
  bool done_ = false;
};

}  // namespace bp::detail

#endif  // BP_SRC_ALGORITHMS_OFFER_SELECT_HPP_
