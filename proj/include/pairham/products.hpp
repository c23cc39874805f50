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
#include <utility>
#include <vector>

#include "pairham/graph.hpp"

namespace pairham {

/// A graph seen as the prism over its low half: layer 0 is [0, base_order),
/// layer 1 is [base_order, 2*base_order), and v ~ v + base_order are the
/// vertical edges. Both layers induce the same labelled graph.
class PrismStructure {
 public:
  /// Throws DomainError unless `host` really is the prism over its low half.
  static PrismStructure identify(Graph host, Vertex base_order);

  const Graph& host() const noexcept { return host_; }
  /// The graph induced on layer 0 (equivalently on layer 1, shifted down).
  const Graph& layer() const noexcept { return layer_; }
  Vertex base_order() const noexcept { return layer_.order(); }

  int layer_of(Vertex v) const noexcept { return v >= base_order() ? 1 : 0; }
  Vertex mirror(Vertex v) const noexcept { return v < base_order() ? v + base_order() : v - base_order(); }
  bool is_vertical(Edge e) const noexcept { return e.v == e.u + base_order() && e.u < base_order(); }

 private:
  friend class PrismTower;
  friend PrismStructure prism(const Graph& g);
  PrismStructure(Graph host, Graph layer) : host_(std::move(host)), layer_(std::move(layer)) {}

  Graph host_;
  Graph layer_;
};

/// P(G) = G □ K_2 with the low/high half labelling.
PrismStructure prism(const Graph& g);

/// P^k(G) together with every intermediate level. Vertex (b, w) of the top,
/// with b in V(G) and w a k-bit word, carries the label b + |V(G)|*w; level j
/// is the subgraph induced on the first |V(G)|*2^j labels.
class PrismTower {
 public:
  const Graph& base() const noexcept { return levels_.front(); }
  const Graph& top() const noexcept { return levels_.back(); }
  int height() const noexcept { return static_cast<int>(levels_.size()) - 1; }
  const Graph& level(int j) const { return levels_.at(static_cast<std::size_t>(j)); }

  /// Level j (j >= 1) split on its last prism bit.
  PrismStructure structure(int j) const;

  Vertex encode(Vertex base_vertex, std::uint64_t word) const;
  std::pair<Vertex, std::uint64_t> decode(Vertex v) const;

 private:
  friend PrismTower prism_power(const Graph& g, int k, const SizeCaps& caps);
  explicit PrismTower(std::vector<Graph> levels) : levels_(std::move(levels)) {}

  std::vector<Graph> levels_;
};

/// Throws SizeCapExceeded when |V(G)|*2^k exceeds caps.tower_vertices.
PrismTower prism_power(const Graph& g, int k, const SizeCaps& caps = {});

/// Vertex (u, v) is labelled u + |V(G)|*v. Throws SizeCapExceeded past
/// caps.product_vertices.
Graph cartesian_product(const Graph& g, const Graph& h, const SizeCaps& caps = {});

/// Cartesian product edges plus the diagonals (u,v)(u',v') with uu' in E(G)
/// and vv' in E(H). Same labelling and cap as cartesian_product.
Graph strong_product(const Graph& g, const Graph& h, const SizeCaps& caps = {});

}  // namespace pairham
