// Copyright 2026 The pairham Authors
//
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

#pragma once

#include <span>
#include <string_view>

#include "pairham/graph.hpp"

namespace pairham {

// Canonically labelled standard graphs. Invalid parameters throw DomainError.

Graph complete_graph(Vertex n);              // n >= 1
Graph cycle_graph(Vertex n);                 // n >= 3, edges i ~ i+1 mod n
Graph path_graph(Vertex n);                  // n >= 1 vertices
Graph star_graph(Vertex n);                  // K_{1,n-1}, centre 0, n >= 1
Graph complete_bipartite(Vertex a, Vertex b);  // sides [0,a) and [a,a+b)

/// Q_d on vertices 0..2^d-1, adjacent iff labels differ in one bit.
/// Agrees label for label with prism_power(hypercube(2), d - 2).top().
Graph hypercube(int d);

/// Centre 0 with `legs` paths of `leg_length` edges each; leg i occupies
/// vertices 1 + i*leg_length .. (i+1)*leg_length, innermost first.
Graph spider(Vertex legs, Vertex leg_length);

enum class Family { complete, cycle, path, star, complete_bipartite, hypercube, spider };

/// Parses "complete", "cycle", "path", "star", "complete-bipartite",
/// "hypercube" or "spider".
Family parse_family(std::string_view name);

/// Dispatches to the generator for `family`; `params` must have the arity
/// that generator expects; star also takes "1 b" for K_{1,b}.
Graph generate(Family family, std::span<const int> params);

}  // namespace pairham
