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

#include "pairham/graph.hpp"
#include "pairham/pairing.hpp"

namespace pairham {

/// Limits for exhaustive PH verification. Pairings beyond max_pairings (in
/// canonical order) are not examined; a search that needs more than
/// max_nodes_per_pairing nodes leaves its pairing undecided.
struct PHBudget {
  std::uint64_t max_pairings = 3'000'000;
  std::uint64_t max_nodes_per_pairing = 10'000'000;
};

enum class PHOutcome { ph, not_ph, budget_exceeded };

/// For not_ph the counts cover the canonical prefix ending at the witness,
/// so they do not depend on the worker count.
struct PHStats {
  std::uint64_t pairings_total = 0;
  std::uint64_t pairings_checked = 0;
  std::uint64_t extensions_found = 0;
  std::uint64_t undecided = 0;
};

struct PHVerdict {
  PHOutcome outcome = PHOutcome::budget_exceeded;
  std::optional<Pairing> witness;  // present iff outcome == not_ph
  std::optional<std::uint64_t> witness_index;
  PHStats stats;

  bool is_ph() const noexcept { return outcome == PHOutcome::ph; }
};

/// Runs find_extension over every pairing of V(g). The witness is the first
/// non-extendable pairing in canonical order, whatever the worker count.
/// Requires even order >= 4.
PHVerdict verify_ph(const Graph& g, const PHBudget& budget = {}, unsigned workers = 1);

}  // namespace pairham
