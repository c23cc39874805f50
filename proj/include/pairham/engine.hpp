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
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "pairham/error.hpp"
#include "pairham/graph.hpp"
#include "pairham/pairing.hpp"
#include "pairham/products.hpp"

namespace pairham {

/// A pairing of a prism split by where its pairs sit. All labels are host labels.
struct PairingPartition {
  std::vector<Edge> lower;  // both ends in layer 0
  std::vector<Edge> upper;  // both ends in layer 1
  std::vector<Edge> cross;  // (x, x̄) with x in layer 0 and x̄ in layer 1
};

/// Throws DomainError if the pairing and the prism differ in order.
PairingPartition partition_pairing(const Pairing& p, const PrismStructure& s);

enum class ExtensionCase {
  base,    // answered by the base oracle
  splice,  // no cross pairs: mirror, then splice each cycle in through two verticals
  bridge,  // cross pairs: close layer 0 with L, carry its paths to layer 1 as R
};

/// What one level of the construction did, with the levels below it as
/// children (splice: [layer 0]; bridge: [layer 0, layer 1]). Vertex labels
/// are local to the layer, i.e. in 0..layer_order-1.
struct ExtensionTrace {
  ExtensionCase kind = ExtensionCase::base;
  Vertex layer_order = 0;

  // splice
  std::size_t cycle_count = 0;
  std::vector<Edge> splices;  // one mirrored-matching edge per cycle, in cycle order

  // bridge
  std::vector<Edge> left;                  // L, completing the layer-0 pairs
  std::vector<std::vector<Vertex>> paths;  // layer-0 cycle minus L, one path per L pair
  std::vector<Edge> right;                 // R, joining the far ends of those paths

  std::vector<ExtensionTrace> children;

  friend bool operator==(const ExtensionTrace&, const ExtensionTrace&) = default;
};

struct Extension {
  PerfectMatching matching;
  ExtensionTrace trace;
};

/// Extends pairings of one fixed graph: the returned matching must turn the
/// pairing into a Hamiltonian cycle.
using ExtensionOracle = std::function<Extension(const Pairing&)>;

/// The base graph has no extension for `stuck()`; that pairing certifies the
/// base is not PH.
class BaseNotExtendable : public Error {
 public:
  explicit BaseNotExtendable(Pairing stuck);
  const Pairing& stuck() const noexcept { return stuck_; }

 private:
  Pairing stuck_;
};

/// Resolves the two free choices of the construction.
class ChoiceRule {
 public:
  virtual ~ChoiceRule() = default;
  /// Index of the splice edge among the cycle's mirrored-matching edges (sorted).
  virtual std::size_t pick_splice(std::span<const Edge> candidates) const = 0;
  /// A pairing of the unmatched layer-0 vertices (given ascending).
  virtual std::vector<Edge> pick_left(std::span<const Vertex> unmatched) const = 0;
};

/// Least splice edge; L pairs consecutive unmatched vertices.
const ChoiceRule& least_choice();

Extension extend_case1(const PairingPartition& part, const PrismStructure& s, const ExtensionOracle& layer_oracle,
                       const ChoiceRule& rule = least_choice());
Extension extend_case2(const PairingPartition& part, const PrismStructure& s, const ExtensionOracle& layer_oracle,
                       const ChoiceRule& rule = least_choice());

/// Extends a pairing of tower.top(), recursing on the last prism bit down to
/// `base`. Throws BaseNotExtendable when the base oracle gets stuck.
Extension extend(const Pairing& p, const PrismTower& tower, const ExtensionOracle& base,
                 const ChoiceRule& rule = least_choice());

/// Re-runs the construction taking every choice from `trace`. Throws
/// DomainError if the trace does not fit the pairing.
Extension replay(const Pairing& p, const PrismTower& tower, const ExtensionTrace& trace,
                 const ExtensionOracle& base);

/// Brute-force oracle for `g` with a thread-safe cache keyed by pairing.
/// Failures are cached as well and surface as BaseNotExtendable.
class MemoizedBaseOracle {
 public:
  explicit MemoizedBaseOracle(Graph g, std::uint64_t max_nodes = UINT64_MAX);
  ~MemoizedBaseOracle();

  Extension operator()(const Pairing& p) const;
  std::size_t cache_size() const;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

ExtensionOracle memoized_base_oracle(const Graph& g);

}  // namespace pairham
