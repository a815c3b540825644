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

#ifndef BP_ORACLE_MAX_FLOW_HPP_
#define BP_ORACLE_MAX_FLOW_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

namespace bp {

// Dinic's algorithm on an explicit residual network.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes);

  // Returns a handle for flow_on().
  std::size_t add_edge(std::size_t from, std::size_t to, std::int64_t capacity);

  std::int64_t run(std::size_t source, std::size_t sink);

  std::int64_t flow_on(std::size_t edge) const;

 private:
  struct Arc {
    std::size_t to;
    std::int64_t capacity;
    std::int64_t flow;
  };

  bool levels(std::size_t source, std::size_t sink);
  std::int64_t push(std::size_t v, std::size_t sink, std::int64_t limit);

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace bp

#endif  // BP_ORACLE_MAX_FLOW_HPP_
