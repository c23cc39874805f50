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

#include "pairham/ph_verify.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>
#include <vector>

#include "pairham/cycles.hpp"
#include "pairham/error.hpp"

namespace pairham {
namespace {

enum Mark : std::uint8_t { unscanned, extended, stuck, undecided };

constexpr std::uint64_t kChunk = 256;

}  // namespace

PHVerdict verify_ph(const Graph& g, const PHBudget& budget, unsigned workers) {
  const Vertex n = g.order();
  if (n < 4 || n % 2 != 0) {
    throw DomainError("the PH-property is only decided for even orders >= 4, got " + std::to_string(n));
  }
  const std::uint64_t total = pairing_count(n);
  const std::uint64_t limit = std::min(total, budget.max_pairings);

  std::vector<std::uint8_t> marks(static_cast<std::size_t>(limit), unscanned);
  std::atomic<std::uint64_t> next_chunk{0};
  std::atomic<std::uint64_t> first_stuck{limit};

  auto worker = [&] {
    for (;;) {
      const std::uint64_t begin = next_chunk.fetch_add(kChunk);
      if (begin >= limit) return;
      const std::uint64_t end = std::min(limit, begin + kChunk);
      for (std::uint64_t i = begin; i < end; ++i) {
        // Indices past a known failure cannot change the witness.
        if (i > first_stuck.load(std::memory_order_relaxed)) return;
        ExtensionSearch s = search_extension(g, pairing_at(n, i), budget.max_nodes_per_pairing);
        if (s.outcome == SearchOutcome::found) {
          marks[i] = extended;
        } else if (s.outcome == SearchOutcome::budget_exceeded) {
          marks[i] = undecided;
        } else {
          marks[i] = stuck;
          std::uint64_t cur = first_stuck.load();
          while (i < cur && !first_stuck.compare_exchange_weak(cur, i)) {
          }
        }
      }
    }
  };

  workers = std::max(1u, workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  PHVerdict verdict;
  verdict.stats.pairings_total = total;
  const std::uint64_t stop = first_stuck.load();
  const std::uint64_t scanned = stop < limit ? stop + 1 : limit;
  verdict.stats.pairings_checked = scanned;
  for (std::uint64_t i = 0; i < scanned; ++i) {
    if (marks[i] == extended) ++verdict.stats.extensions_found;
    if (marks[i] == undecided) ++verdict.stats.undecided;
  }
  if (stop < limit) {
    verdict.outcome = PHOutcome::not_ph;
    verdict.witness = pairing_at(n, stop);
    verdict.witness_index = stop;
  } else if (limit < total || verdict.stats.undecided > 0) {
    verdict.outcome = PHOutcome::budget_exceeded;
  } else {
    verdict.outcome = PHOutcome::ph;
  }
  return verdict;
}

}  // namespace pairham
