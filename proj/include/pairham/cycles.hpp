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
#include <optional>
#include <vector>

#include "pairham/graph.hpp"
#include "pairham/pairing.hpp"

namespace pairham {

enum class Side { first, second };

/// A closed walk alternating between two pairings. steps[i] names the
/// pairing that joins vertices[i] to vertices[(i+1) % length]. A pair shared
/// by both pairings gives a cycle of length 2.
struct AlternatingCycle {
  std::vector<Vertex> vertices;
  std::vector<Side> steps;

  std::size_t length() const noexcept { return vertices.size(); }
};

/// The multigraph union of two pairings split into its cycles, ordered by
/// smallest vertex. Each cycle starts at its smallest vertex and leaves it
/// along the first pairing.
struct CycleDecomposition {
  std::vector<AlternatingCycle> cycles;
};

/// Throws DomainError if the pairings differ in order.
CycleDecomposition union_cycle_decomposition(const Pairing& a, const Pairing& b);

/// True iff p and n are disjoint and p ∪ n is a single cycle through every vertex.
bool is_hamiltonian_extension(const Pairing& p, const Pairing& n);
bool is_hamiltonian_extension(const Pairing& p, const PerfectMatching& n);

/// is_hamiltonian_extension plus: every pair of n is an edge of g.
bool validates_against(const Graph& g, const Pairing& p, const Pairing& n);

/// The Hamiltonian cycle p ∪ n as a vertex sequence from 0, leaving 0 along
/// p. Empty if n is not a Hamiltonian extension of p.
std::vector<Vertex> hamiltonian_cycle(const Pairing& p, const Pairing& n);

enum class SearchOutcome { found, none, budget_exceeded };

struct ExtensionSearch {
  SearchOutcome outcome = SearchOutcome::none;
  std::optional<PerfectMatching> matching;
  std::uint64_t nodes = 0;
};

/// Depth-first search for a perfect matching N of g with p ∪ N a Hamiltonian
/// cycle. The walk starts at 0, follows p, then branches over g-edges to
/// unvisited vertices in ascending order, and closes back to 0 at full
/// length. Requires even order >= 4 (DomainError otherwise).
ExtensionSearch search_extension(const Graph& g, const Pairing& p, std::uint64_t max_nodes);

/// Unbudgeted search_extension.
std::optional<PerfectMatching> find_extension_bruteforce(const Graph& g, const Pairing& p);

}  // namespace pairham
