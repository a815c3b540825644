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

#include "bp/oracle/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace bp {

MaxFlow::MaxFlow(std::size_t nodes) : out_(nodes), level_(nodes), next_(nodes) {}

std::size_t MaxFlow::add_edge(std::size_t from, std::size_t to, std::int64_t capacity) {
  const std::size_t id = arcs_.size();
  arcs_.push_back({to, capacity, 0});
  out_[from].push_back(id);
  arcs_.push_back({from, 0, 0});
  out_[to].push_back(id + 1);
  return id;
}

bool MaxFlow::levels(std::size_t source, std::size_t sink) {
  std::fill(level_.begin(), level_.end(), -1);
  level_[source] = 0;
  std::queue<std::size_t> queue;
  queue.push(source);
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop();
    for (std::size_t id : out_[v]) {
      const Arc& a = arcs_[id];
      if (a.capacity > a.flow && level_[a.to] < 0) {
        level_[a.to] = level_[v] + 1;
        queue.push(a.to);
      }
    }
  }
  return level_[sink] >= 0;
}

std::int64_t MaxFlow::push(std::size_t v, std::size_t sink, std::int64_t limit) {
  if (v == sink) return limit;
  for (; next_[v] < out_[v].size(); ++next_[v]) {
    const std::size_t id = out_[v][next_[v]];
    Arc& a = arcs_[id];
    if (a.capacity <= a.flow || level_[a.to] != level_[v] + 1) continue;
    const std::int64_t pushed = push(a.to, sink, std::min(limit, a.capacity - a.flow));
    if (pushed > 0) {
      a.flow += pushed;
      arcs_[id ^ 1].flow -= pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t MaxFlow::run(std::size_t source, std::size_t sink) {
  std::int64_t total = 0;
  while (levels(source, sink)) {
    std::fill(next_.begin(), next_.end(), 0);
    while (const std::int64_t f =
               push(source, sink, std::numeric_limits<std::int64_t>::max())) {
      total += f;
    }
  }
  return total;
}

std::int64_t MaxFlow::flow_on(std::size_t edge) const { return arcs_[edge].flow; }

}  // namespace bp
