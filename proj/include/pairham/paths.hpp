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

#include <cstdint>
#include <span>
#include <vector>

#include "pairham/graph.hpp"

namespace pairham {

/// Node limit for backtracking searches.
struct SearchBudget {
  std::uint64_t max_nodes = 50'000'000;
};

struct TraceResult {
  bool traceable = false;
  std::vector<Vertex> path;  // Hamiltonian path when traceable
  std::uint64_t nodes = 0;
};

/// Decides whether `g` has a Hamiltonian path and returns one if so.
/// Throws BudgetExceeded when the search needs more than budget.max_nodes.
TraceResult is_traceable(const Graph& g, const SearchBudget& budget = {});

/// True iff `path` visits every vertex of `g` exactly once along edges of `g`.
bool is_hamiltonian_path(const Graph& g, std::span<const Vertex> path);

}  // namespace pairham
