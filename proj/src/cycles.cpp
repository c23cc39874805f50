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

#include "pairham/cycles.hpp"

#include <limits>
#include <string>

#include "pairham/error.hpp"

namespace pairham {

CycleDecomposition union_cycle_decomposition(const Pairing& a, const Pairing& b) {
  if (a.order() != b.order()) throw DomainError("pairings differ in order");
  const Vertex n = a.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  CycleDecomposition out;
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    AlternatingCycle cycle;
    Vertex v = start;
    Side side = Side::first;
    do {
      seen[v] = 1;
      cycle.vertices.push_back(v);
      cycle.steps.push_back(side);
      v = side == Side::first ? a.partner(v) : b.partner(v);
      side = side == Side::first ? Side::second : Side::first;
    } while (v != start);
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

bool is_hamiltonian_extension(const Pairing& p, const Pairing& n) {
  if (p.order() != n.order() || p.order() < 4) return false;
  for (Vertex v = 0; v < p.order(); ++v)
    if (p.partner(v) == n.partner(v)) return false;
  // Walk the alternating cycle through 0 and check it covers everything.
  Vertex v = 0;
  Vertex length = 0;
  do {
    v = n.partner(p.partner(v));
    length += 2;
  } while (v != 0 && length <= p.order());
  return length == p.order();
}

bool is_hamiltonian_extension(const Pairing& p, const PerfectMatching& n) {
  return is_hamiltonian_extension(p, n.pairing());
}

bool validates_against(const Graph& g, const Pairing& p, const Pairing& n) {
  if (g.order() != n.order()) return false;
  for (const Edge& e : n.pairs())
    if (!g.has_edge(e.u, e.v)) return false;
  return is_hamiltonian_extension(p, n);
}

std::vector<Vertex> hamiltonian_cycle(const Pairing& p, const Pairing& n) {
  if (!is_hamiltonian_extension(p, n)) return {};
  std::vector<Vertex> cycle;
  Vertex v = 0;
  do {
    cycle.push_back(v);
    cycle.push_back(p.partner(v));
    v = n.partner(p.partner(v));
  } while (v != 0);
  return cycle;
}

namespace {

class AlternatingWalk {
 public:
  AlternatingWalk(const Graph& g, const Pairing& p, std::uint64_t max_nodes)
      : g_(g), p_(p), max_nodes_(max_nodes), visited_(g.order(), 0), partner_(g.order(), -1) {}

  SearchOutcome run() {
    const Vertex first = p_.partner(0);
    visited_[0] = visited_[first] = 1;
    try {
      if (extend(first, 2)) return SearchOutcome::found;
    } catch (const BudgetExceeded&) {
      return SearchOutcome::budget_exceeded;
    }
    return SearchOutcome::none;
  }

  Pairing matching() const { return Pairing::from_partners(partner_); }
  std::uint64_t nodes() const { return nodes_; }

 private:
  // `end` was just reached along p; the next step must be a g-edge.
  bool extend(Vertex end, Vertex covered) {
    if (++nodes_ > max_nodes_) throw BudgetExceeded("extension search budget exhausted");
    if (covered == g_.order()) {
      if (!g_.has_edge(end, 0)) return false;
      partner_[end] = 0;
      partner_[0] = end;
      return true;
    }
    for (Vertex w : g_.neighbors(end)) {
      if (visited_[w]) continue;
      const Vertex next = p_.partner(w);
      visited_[w] = visited_[next] = 1;
      partner_[end] = w;
      partner_[w] = end;
      if (extend(next, covered + 2)) return true;
      partner_[end] = partner_[w] = -1;
      visited_[w] = visited_[next] = 0;
    }
    return false;
  }

  const Graph& g_;
  const Pairing& p_;
  std::uint64_t max_nodes_;
  std::vector<char> visited_;
  std::vector<Vertex> partner_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

ExtensionSearch search_extension(const Graph& g, const Pairing& p, std::uint64_t max_nodes) {
  if (g.order() != p.order()) throw DomainError("pairing and graph differ in order");
  if (g.order() < 4 || g.order() % 2 != 0) {
    throw DomainError("extension search needs an even order of at least 4, got " + std::to_string(g.order()));
  }
  AlternatingWalk walk(g, p, max_nodes);
  ExtensionSearch result;
  result.outcome = walk.run();
  result.nodes = walk.nodes();
  if (result.outcome == SearchOutcome::found) result.matching.emplace(g, walk.matching());
  return result;
}

std::optional<PerfectMatching> find_extension_bruteforce(const Graph& g, const Pairing& p) {
  return search_extension(g, p, std::numeric_limits<std::uint64_t>::max()).matching;
}

}  // namespace pairham
