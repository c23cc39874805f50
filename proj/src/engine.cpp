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

#include "pairham/engine.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "pairham/cycles.hpp"

namespace pairham {
namespace {

class LeastChoice final : public ChoiceRule {
 public:
  std::size_t pick_splice(std::span<const Edge>) const override { return 0; }
  std::vector<Edge> pick_left(std::span<const Vertex> unmatched) const override {
    std::vector<Edge> out;
    for (std::size_t i = 0; i + 1 < unmatched.size(); i += 2) out.push_back(make_edge(unmatched[i], unmatched[i + 1]));
    return out;
  }
};

// The choices for a single level, either from a rule or from a recorded trace.
struct LevelChoices {
  std::function<Edge(std::size_t cycle, std::span<const Edge> candidates)> splice;
  std::function<std::vector<Edge>(std::span<const Vertex> unmatched)> left;
};

LevelChoices from_rule(const ChoiceRule& rule) {
  return {
      [&rule](std::size_t, std::span<const Edge> candidates) {
        std::size_t i = rule.pick_splice(candidates);
        if (i >= candidates.size()) throw std::logic_error("choice rule picked a missing splice edge");
        return candidates[i];
      },
      [&rule](std::span<const Vertex> unmatched) { return rule.pick_left(unmatched); },
  };
}

LevelChoices from_trace(const ExtensionTrace& t) {
  return {
      [&t](std::size_t cycle, std::span<const Edge> candidates) {
        if (cycle >= t.splices.size() ||
            std::find(candidates.begin(), candidates.end(), t.splices[cycle]) == candidates.end()) {
          throw DomainError("trace splice edges do not match the cycle decomposition");
        }
        return t.splices[cycle];
      },
      [&t](std::span<const Vertex>) { return t.left; },
  };
}

Pairing assemble(const PairingPartition& part, Vertex order) {
  std::vector<Edge> all;
  all.insert(all.end(), part.lower.begin(), part.lower.end());
  all.insert(all.end(), part.upper.begin(), part.upper.end());
  all.insert(all.end(), part.cross.begin(), part.cross.end());
  return Pairing(order, all);
}

std::vector<Edge> shifted_down(const std::vector<Edge>& edges, Vertex by) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.push_back({e.u - by, e.v - by});
  return out;
}

// The engine never hands back an unchecked certificate.
PerfectMatching certify(const PrismStructure& s, const Pairing& p, std::vector<Vertex> partner) {
  PerfectMatching n(s.host(), Pairing::from_partners(std::move(partner)));
  if (!is_hamiltonian_extension(p, n)) {
    throw std::logic_error("prism construction produced a matching that is not a Hamiltonian extension");
  }
  return n;
}

std::vector<Vertex> stacked(const PerfectMatching& low, const PerfectMatching& high) {
  const Vertex h = low.order();
  std::vector<Vertex> partner(static_cast<std::size_t>(2 * h));
  for (Vertex v = 0; v < h; ++v) {
    partner[v] = low.partner(v);
    partner[v + h] = high.partner(v) + h;
  }
  return partner;
}

Extension run_splice(const PairingPartition& part, const PrismStructure& s, const ExtensionOracle& lower_oracle,
                     const LevelChoices& choose) {
  if (!part.cross.empty()) throw DomainError("splice case needs a pairing without cross pairs");
  const Vertex h = s.base_order();
  const Pairing p = assemble(part, 2 * h);

  Extension low = lower_oracle(Pairing(h, part.lower));
  const PerfectMatching& m = low.matching;

  // In layer-local labels the mirrored matching M' is M itself.
  const Pairing upper(h, shifted_down(part.upper, h));
  const CycleDecomposition cycles = union_cycle_decomposition(upper, m.pairing());

  ExtensionTrace trace;
  trace.kind = ExtensionCase::splice;
  trace.layer_order = h;
  trace.cycle_count = cycles.cycles.size();

  std::vector<Vertex> partner = stacked(m, m);
  for (std::size_t i = 0; i < cycles.cycles.size(); ++i) {
    const AlternatingCycle& c = cycles.cycles[i];
    std::vector<Edge> candidates;
    for (std::size_t j = 0; j < c.length(); ++j) {
      if (c.steps[j] == Side::second) candidates.push_back(make_edge(c.vertices[j], c.vertices[(j + 1) % c.length()]));
    }
    std::sort(candidates.begin(), candidates.end());
    const Edge e = choose.splice(i, candidates);
    trace.splices.push_back(e);
    // Drop e from both copies and join its ends through the verticals.
    for (Vertex x : {e.u, e.v}) {
      partner[x] = x + h;
      partner[x + h] = x;
    }
  }

  trace.children.push_back(std::move(low.trace));
  return {certify(s, p, std::move(partner)), std::move(trace)};
}

Extension run_bridge(const PairingPartition& part, const PrismStructure& s, const ExtensionOracle& lower_oracle,
                     const ExtensionOracle& upper_oracle, const LevelChoices& choose) {
  if (part.cross.empty()) throw DomainError("bridge case needs at least one cross pair");
  const Vertex h = s.base_order();
  const Pairing p = assemble(part, 2 * h);

  std::vector<Vertex> unmatched;
  std::vector<Vertex> far_end(static_cast<std::size_t>(h), -1);
  for (const Edge& x : part.cross) {
    unmatched.push_back(x.u);
    far_end[x.u] = x.v - h;
  }
  std::sort(unmatched.begin(), unmatched.end());

  ExtensionTrace trace;
  trace.kind = ExtensionCase::bridge;
  trace.layer_order = h;
  trace.left = choose.left(unmatched);
  std::sort(trace.left.begin(), trace.left.end());

  std::vector<Edge> lower_closed = part.lower;
  lower_closed.insert(lower_closed.end(), trace.left.begin(), trace.left.end());
  const Pairing lower_pairs(h, lower_closed);  // throws if L is not a pairing of the unmatched vertices
  for (const Edge& e : trace.left) {
    if (far_end[e.u] < 0 || far_end[e.v] < 0) throw DomainError("L must pair unmatched layer-0 vertices");
  }

  Extension low = lower_oracle(lower_pairs);
  const PerfectMatching& m = low.matching;

  // Removing L from the layer-0 Hamiltonian cycle leaves one path per L pair.
  std::vector<char> done(static_cast<std::size_t>(h), 0);
  for (Vertex x : unmatched) {
    if (done[x]) continue;
    std::vector<Vertex> path{x};
    Vertex v = m.partner(x);
    path.push_back(v);
    while (far_end[v] < 0) {
      v = lower_pairs.partner(v);
      path.push_back(v);
      v = m.partner(v);
      path.push_back(v);
    }
    done[x] = done[v] = 1;
    trace.right.push_back(make_edge(far_end[x], far_end[v]));
    trace.paths.push_back(std::move(path));
  }
  std::sort(trace.right.begin(), trace.right.end());

  std::vector<Edge> upper_closed = shifted_down(part.upper, h);
  upper_closed.insert(upper_closed.end(), trace.right.begin(), trace.right.end());
  std::optional<Pairing> upper_pairs;
  try {
    upper_pairs.emplace(h, upper_closed);
  } catch (const DomainError&) {
    throw std::logic_error("R collides with the layer-1 pairs");
  }

  Extension high = upper_oracle(*upper_pairs);
  std::vector<Vertex> partner = stacked(m, high.matching);

  trace.children.push_back(std::move(low.trace));
  trace.children.push_back(std::move(high.trace));
  return {certify(s, p, std::move(partner)), std::move(trace)};
}

class TowerRun {
 public:
  TowerRun(const PrismTower& tower, const ExtensionOracle& base, const ChoiceRule& rule)
      : tower_(tower), base_(base), rule_(rule) {}

  Extension level(int j, const Pairing& p, const ExtensionTrace* guide) const {
    if (j == 0) return base_(p);
    const PrismStructure s = tower_.structure(j);
    const PairingPartition part = partition_pairing(p, s);
    const ExtensionCase kind = part.cross.empty() ? ExtensionCase::splice : ExtensionCase::bridge;
    if (guide && (guide->kind != kind || guide->layer_order != s.base_order() ||
                  guide->children.size() != (kind == ExtensionCase::splice ? 1u : 2u))) {
      throw DomainError("trace does not match the pairing at tower level " + std::to_string(j));
    }

    auto below = [this, j, guide](std::size_t child) -> ExtensionOracle {
      const ExtensionTrace* sub = guide ? &guide->children[child] : nullptr;
      return [this, j, sub](const Pairing& q) { return level(j - 1, q, sub); };
    };
    const LevelChoices choose = guide ? from_trace(*guide) : from_rule(rule_);
    if (kind == ExtensionCase::splice) return run_splice(part, s, below(0), choose);
    return run_bridge(part, s, below(0), below(1), choose);
  }

 private:
  const PrismTower& tower_;
  const ExtensionOracle& base_;
  const ChoiceRule& rule_;
};

}  // namespace

BaseNotExtendable::BaseNotExtendable(Pairing stuck)
    : Error("base graph has no Hamiltonian extension for a pairing of its " + std::to_string(stuck.order()) +
            " vertices (tower level 0)"),
      stuck_(std::move(stuck)) {}

const ChoiceRule& least_choice() {
  static const LeastChoice rule;
  return rule;
}

PairingPartition partition_pairing(const Pairing& p, const PrismStructure& s) {
  if (p.order() != s.host().order()) throw DomainError("pairing and prism differ in order");
  PairingPartition part;
  for (const Edge& e : p.pairs()) {
    const int a = s.layer_of(e.u);
    const int b = s.layer_of(e.v);
    if (a == 0 && b == 0) {
      part.lower.push_back(e);
    } else if (a == 1 && b == 1) {
      part.upper.push_back(e);
    } else {
      part.cross.push_back(e);
    }
  }
  return part;
}

Extension extend_case1(const PairingPartition& part, const PrismStructure& s, const ExtensionOracle& layer_oracle,
                       const ChoiceRule& rule) {
  return run_splice(part, s, layer_oracle, from_rule(rule));
}

Extension extend_case2(const PairingPartition& part, const PrismStructure& s, const ExtensionOracle& layer_oracle,
                       const ChoiceRule& rule) {
  return run_bridge(part, s, layer_oracle, layer_oracle, from_rule(rule));
}

Extension extend(const Pairing& p, const PrismTower& tower, const ExtensionOracle& base, const ChoiceRule& rule) {
  if (p.order() != tower.top().order()) throw DomainError("pairing and tower top differ in order");
  return TowerRun(tower, base, rule).level(tower.height(), p, nullptr);
}

Extension replay(const Pairing& p, const PrismTower& tower, const ExtensionTrace& trace, const ExtensionOracle& base) {
  if (p.order() != tower.top().order()) throw DomainError("pairing and tower top differ in order");
  return TowerRun(tower, base, least_choice()).level(tower.height(), p, tower.height() > 0 ? &trace : nullptr);
}

struct MemoizedBaseOracle::State {
  Graph graph;
  std::uint64_t max_nodes;
  mutable std::shared_mutex mutex;
  std::unordered_map<std::uint64_t, std::optional<Pairing>> cache;
};

MemoizedBaseOracle::MemoizedBaseOracle(Graph g, std::uint64_t max_nodes)
    : state_(std::make_unique<State>()) {
  if (g.order() < 4 || g.order() % 2 != 0) {
    throw DomainError("base oracle needs an even order of at least 4, got " + std::to_string(g.order()));
  }
  state_->graph = std::move(g);
  state_->max_nodes = max_nodes;
}

MemoizedBaseOracle::~MemoizedBaseOracle() = default;

Extension MemoizedBaseOracle::operator()(const Pairing& p) const {
  const std::uint64_t key = pairing_index(p);
  std::optional<Pairing> found;
  bool hit = false;
  {
    std::shared_lock lock(state_->mutex);
    auto it = state_->cache.find(key);
    if (it != state_->cache.end()) {
      hit = true;
      found = it->second;
    }
  }
  if (!hit) {
    ExtensionSearch s = search_extension(state_->graph, p, state_->max_nodes);
    if (s.outcome == SearchOutcome::budget_exceeded) throw BudgetExceeded("base oracle search budget exhausted");
    if (s.matching) found = s.matching->pairing();
    // Identical inputs give identical values, so a concurrent insert is harmless.
    std::unique_lock lock(state_->mutex);
    state_->cache.insert_or_assign(key, found);
  }
  if (!found) throw BaseNotExtendable(p);
  ExtensionTrace trace;
  trace.layer_order = p.order();
  return {PerfectMatching(state_->graph, *found), std::move(trace)};
}

std::size_t MemoizedBaseOracle::cache_size() const {
  std::shared_lock lock(state_->mutex);
  return state_->cache.size();
}

ExtensionOracle memoized_base_oracle(const Graph& g) {
  auto oracle = std::make_shared<MemoizedBaseOracle>(g);
  return [oracle](const Pairing& p) { return (*oracle)(p); };
}

}  // namespace pairham
