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
#include <span>
#include <vector>

#include "pairham/graph.hpp"
#include "pairham/paths.hpp"
#include "pairham/ph_verify.hpp"

namespace pairham {

/// A spanning tree of some host graph together with its number of leaves.
struct LeafTree {
  std::vector<Edge> edges;  // sorted
  Vertex leaf_count = 0;
};

/// True iff `edges` is a spanning tree of `g` (connected, acyclic, n-1 edges of g).
bool is_spanning_tree(const Graph& g, std::span<const Edge> edges);

/// Validates and wraps. Throws DomainError when `edges` is not a spanning tree of `g`.
LeafTree make_leaf_tree(const Graph& g, std::vector<Edge> edges);

struct MlBudget {
  std::uint64_t max_nodes = 50'000'000;  // branch-and-bound nodes
  Vertex max_order = 14;
  SearchBudget path_search{};
};

/// `witness` realises `value`; when `exact` is false the node budget ran out
/// and `value` is only an upper bound.
struct MlResult {
  Vertex value = 0;
  LeafTree witness;
  bool exact = false;
};

/// Minimum number of leaves over all spanning trees. A Hamiltonian path
/// settles ml = 2 directly; otherwise spanning trees are grown from vertex 0
/// by include/exclude branching on frontier edges, pruned by the leaves
/// that can no longer gain a second tree edge.
/// Throws DomainError for disconnected graphs or fewer than 2 vertices and
/// SizeCapExceeded past budget.max_order.
MlResult min_leaf_number(const Graph& g, const MlBudget& budget = {});

struct LeafReduction {
  LeafTree tree;                     // spanning tree of prism(g).host()
  std::vector<Vertex> leaf_history;  // leaves of T_0 .. T_{t-1}
  std::vector<Edge> added;           // verticals e_1 .. e_{t-1}
  std::vector<Edge> removed;         // f_1 .. f_{t-1}
};

/// Builds a spanning tree of the prism with at most t-1 leaves from a
/// spanning tree of g with t > 2 leaves: two mirrored copies joined at the
/// smallest leaf, then one vertical per remaining leaf, each closing a cycle
/// that is broken next to a vertex of degree >= 3.
LeafReduction lemma1_reduce(const Graph& g, const LeafTree& tree);

/// ml(g) - 2: prisms of at least this power are traceable.
int traceable_threshold(const Graph& g, const MlBudget& budget = {});

/// ml(g) + 3: a prism power known to have the PH-property.
int ph_power_upper_bound(const Graph& g, const MlBudget& budget = {});

enum class LevelStatus { ph, not_ph, undefined, budget_exceeded };

struct LevelVerdict {
  int power = 0;
  Vertex order = 0;
  LevelStatus status = LevelStatus::undefined;  // undefined: odd order or fewer than 4 vertices
};

enum class ProbeStatus { found, not_found, budget_exceeded, cap_exceeded };

struct PowerProbe {
  ProbeStatus status = ProbeStatus::not_found;
  std::optional<int> power;  // smallest k with P^k(g) PH, when found
  std::vector<LevelVerdict> levels;
};

/// Smallest k <= max_k such that P^k(g) has the PH-property, by exhaustive
/// verification. Stops with cap_exceeded before a level larger than
/// max_order vertices and with budget_exceeded when a verification is undecided.
PowerProbe ph_power_exact(const Graph& g, int max_k, const PHBudget& budget = {}, Vertex max_order = 16,
                          unsigned workers = 1);

}  // namespace pairham
