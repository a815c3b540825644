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
#include <limits>
#include <string>
#include <vector>

#include "bp/oracle/oracle.hpp"

namespace bp {

namespace {

struct Search {
  const Graph& g;
  std::vector<std::vector<std::size_t>> options;  // dense neighbor indices
  std::vector<std::uint64_t> load;
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();

  void go(std::size_t i, std::uint64_t current_max) {
    if (current_max >= best) return;
    if (i == options.size()) {
      best = current_max;
      return;
    }
    for (std::size_t u : options[i]) {
      ++load[u];
      go(i + 1, std::max(current_max, load[u]));
      --load[u];
    }
  }
};

}  // namespace

std::uint64_t brute_force_optimal_load(const Graph& g, std::uint64_t budget) {
  if (g.empty()) throw InvalidInput("graph has no vertices");
  std::uint64_t product = 1;
  for (VertexId v : g.vertices()) {
    const std::uint64_t d = g.degree(v);
    if (d == 0) throw NoValidSelection(v);
    if (product > budget / d) {
      throw BudgetExceeded(v, "brute force needs more than " + std::to_string(budget) +
                                  " combinations");
    }
    product *= d;
  }
  Search s{g, {}, std::vector<std::uint64_t>(g.num_vertices(), 0)};
  for (VertexId v : g.vertices()) {
    std::vector<std::size_t> opts;
    for (VertexId u : g.neighbors(v)) opts.push_back(g.index_of(u));
    s.options.push_back(std::move(opts));
  }
  s.go(0, 0);
  return s.best;
}

}  // namespace bp
