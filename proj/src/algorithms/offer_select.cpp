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

#include "offer_select.hpp"

#include <algorithm>

#include "bp/graph/graph.hpp"

namespace bp::detail {

CoreShape CoreShape::make(BipartiteMode mode, std::uint64_t degree_bound,
                          std::optional<std::uint64_t> t, std::uint64_t n_estimate) {
  CoreShape s;
  s.mode = mode;
  s.degree_bound = degree_bound;
  const std::uint32_t log_n = ceil_log2(std::max<std::uint64_t>(n_estimate, 2));
  s.phases_per_run = log_n + 1;
  switch (mode) {
    case BipartiteMode::kKnownT:
      s.t = t.value_or(1);
      s.phase_cap = s.phases_per_run;
      break;
    case BipartiteMode::kDoubling:
      // One run per estimate 1, 2, 4, ..., 2^ceil(log2 n).
      s.phase_cap = s.phases_per_run * (log_n + 1);
      break;
    case BipartiteMode::kParallel:
      s.instances = log_n + 1;
      s.phase_cap = s.phases_per_run;
      break;
  }
  return s;
}

std::uint64_t CoreShape::threshold(std::uint32_t instance, std::uint32_t phase) const {
  switch (mode) {
    case BipartiteMode::kKnownT:
      return 2 * degree_bound * t;
    case BipartiteMode::kDoubling:
      return 2 * degree_bound * (std::uint64_t{1} << ((phase - 1) / phases_per_run));
    case BipartiteMode::kParallel:
      return 2 * degree_bound * (std::uint64_t{1} << instance);
  }
  return 0;
}

VCore::VCore(const CoreShape& shape, std::uint64_t degree)
    : shape_(shape),
      degree_(shape.instances, degree),
      active_(shape.instances, true) {}

std::uint64_t VCore::offer(std::uint32_t phase,
                           const std::vector<std::uint64_t>& left) {
  if (done_) return 0;
  for (std::uint64_t mask : left) {
    for (std::uint32_t i = 0; i < shape_.instances; ++i) {
      if ((mask >> i) & 1) --degree_[i];
    }
  }
  if (shape_.mode == BipartiteMode::kDoubling && phase > 1 &&
      (phase - 1) % shape_.phases_per_run == 0) {
    // A new run starts over the U-vertices still unmatched.
    active_[0] = true;
  }

  last_phase_ = phase;
  last_phase_degree_ = active_[0] ? static_cast<std::int64_t>(degree_[0]) : -1;

  std::uint64_t mask = 0;
  for (std::uint32_t i = 0; i < shape_.instances; ++i) {
    if (!active_[i]) continue;
    if (degree_[i] == 0) {
      active_[i] = false;
    } else if (degree_[i] <= shape_.threshold(i, phase)) {
      mask |= std::uint64_t{1} << i;
      active_[i] = false;
    }
    if (i == 0 && !active_[0] && !removed_phase_) removed_phase_ = phase;
  }

  const bool any_active = std::find(active_.begin(), active_.end(), true) != active_.end();
  if (shape_.mode == BipartiteMode::kDoubling) {
    // Stays around for later runs while any U-neighbor is unmatched.
    done_ = degree_[0] == 0;
  } else {
    done_ = !any_active;
  }
  if (phase >= shape_.phase_cap) done_ = true;
  return mask;
}

UCore::UCore(const CoreShape& shape)
    : shape_(shape), selection_(shape.instances), phase_(shape.instances, 0) {}

std::uint64_t UCore::select(
    std::uint32_t phase, const std::vector<std::pair<VertexId, std::uint64_t>>& offers) {
  if (done_) return 0;
  std::uint64_t left = 0;
  for (std::uint32_t i = 0; i < shape_.instances; ++i) {
    if (selection_[i]) continue;
    for (const auto& [sender, mask] : offers) {
      if ((mask >> i) & 1) {
        selection_[i] = sender;
        phase_[i] = phase;
        left |= std::uint64_t{1} << i;
        break;
      }
    }
  }
  done_ = std::all_of(selection_.begin(), selection_.end(),
                      [](const auto& s) { return s.has_value(); }) ||
          phase >= shape_.phase_cap;
  return left;
}

std::optional<VertexId> UCore::choice() const {
  for (const auto& s : selection_) {
    if (s) return s;
  }
  return std::nullopt;
}

std::optional<std::uint32_t> UCore::choice_instance() const {
  for (std::uint32_t i = 0; i < selection_.size(); ++i) {
    if (selection_[i]) return i;
  }
  return std::nullopt;
}

std::optional<std::uint32_t> UCore::choice_phase() const {
  const auto i = choice_instance();
  if (!i) return std::nullopt;
  return phase_[*i];
}

}  // namespace bp::detail
