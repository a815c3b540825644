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

#ifndef BP_ALGORITHMS_REGISTRY_HPP_
#define BP_ALGORITHMS_REGISTRY_HPP_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bp/congest/program.hpp"
#include "bp/graph/graph.hpp"

namespace bp {

// Flat key-value parameters: a, t, mode, n_estimate, seed.
using Params = std::map<std::string, std::string>;

// Builds a program by CLI name. Per-vertex inputs (tree orientation,
// bipartite sides) are taken from g. Defaults: a = declared arboricity
// (arboricity-bp) or the largest U-degree (bipartite-*); n_estimate = n.
// Throws InvalidParameter on unknown names or keys, bad values, or missing
// required keys, and PreconditionError when g lacks the needed metadata.
std::unique_ptr<congest::VertexProgram> make_program(const std::string& name,
                                                     const Graph& g,
                                                     const Params& params = {});

std::vector<std::string> program_names();

}  // namespace bp

#endif  // BP_ALGORITHMS_REGISTRY_HPP_
