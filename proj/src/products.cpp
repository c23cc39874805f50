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

#include "pairham/products.hpp"

#include <string>

#include "pairham/error.hpp"

namespace pairham {
namespace {

Graph prism_host(const Graph& g) {
  const Vertex n = g.order();
  std::vector<Edge> edges;
  edges.reserve(2 * g.size() + static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) {
    edges.push_back(e);
    edges.push_back({e.u + n, e.v + n});
  }
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, v + n});
  return Graph(2 * n, edges);
}

void check_product_cap(const Graph& g, const Graph& h, const SizeCaps& caps) {
  const auto n = static_cast<std::size_t>(g.order()) * static_cast<std::size_t>(h.order());
  if (n > caps.product_vertices) {
    throw SizeCapExceeded("product would have " + std::to_string(n) + " vertices (cap " +
                          std::to_string(caps.product_vertices) + ")");
  }
}

std::vector<Edge> cartesian_edges(const Graph& g, const Graph& h) {
  const Vertex n = g.order();
  std::vector<Edge> edges;
  for (Vertex v = 0; v < h.order(); ++v)
    for (const Edge& e : g.edges()) edges.push_back({e.u + n * v, e.v + n * v});
  for (Vertex u = 0; u < n; ++u)
    for (const Edge& f : h.edges()) edges.push_back({u + n * f.u, u + n * f.v});
  return edges;
}

}  // namespace

PrismStructure PrismStructure::identify(Graph host, Vertex base_order) {
  if (base_order < 1 || host.order() != 2 * base_order) {
    throw DomainError("host order must be twice the base order");
  }
  Graph low = host.induced_range(0, base_order);
  Graph high = host.induced_range(base_order, base_order);
  if (!(low == high)) throw DomainError("prism layers are not identically labelled copies");
  for (Vertex v = 0; v < base_order; ++v) {
    if (!host.has_edge(v, v + base_order)) {
      throw DomainError("missing vertical edge at vertex " + std::to_string(v));
    }
  }
  if (host.size() != 2 * low.size() + static_cast<std::size_t>(base_order)) {
    throw DomainError("host has edges between layers other than the verticals");
  }
  return PrismStructure(std::move(host), std::move(low));
}

PrismStructure prism(const Graph& g) { return PrismStructure(prism_host(g), g); }

PrismStructure PrismTower::structure(int j) const {
  if (j < 1 || j > height()) throw DomainError("tower level has no prism split");
  return PrismStructure(level(j), level(j - 1));
}

Vertex PrismTower::encode(Vertex base_vertex, std::uint64_t word) const {
  if (base_vertex < 0 || base_vertex >= base().order() || (word >> height()) != 0) {
    throw DomainError("tower coordinates out of range");
  }
  return base_vertex + base().order() * static_cast<Vertex>(word);
}

std::pair<Vertex, std::uint64_t> PrismTower::decode(Vertex v) const {
  if (v < 0 || v >= top().order()) throw DomainError("tower vertex out of range");
  return {v % base().order(), static_cast<std::uint64_t>(v / base().order())};
}

PrismTower prism_power(const Graph& g, int k, const SizeCaps& caps) {
  if (k < 0) throw DomainError("prism power must be non-negative");
  if (k >= 40 || (static_cast<std::size_t>(g.order()) << k) > caps.tower_vertices) {
    throw SizeCapExceeded("prism tower of height " + std::to_string(k) + " over " +
                          std::to_string(g.order()) + " vertices exceeds the cap of " +
                          std::to_string(caps.tower_vertices));
  }
  std::vector<Graph> levels{g};
  for (int j = 0; j < k; ++j) levels.push_back(prism_host(levels.back()));
  return PrismTower(std::move(levels));
}

Graph cartesian_product(const Graph& g, const Graph& h, const SizeCaps& caps) {
  check_product_cap(g, h, caps);
  return Graph(g.order() * h.order(), cartesian_edges(g, h));
}

Graph strong_product(const Graph& g, const Graph& h, const SizeCaps& caps) {
  check_product_cap(g, h, caps);
  const Vertex n = g.order();
  std::vector<Edge> edges = cartesian_edges(g, h);
  for (const Edge& e : g.edges())
    for (const Edge& f : h.edges()) {
      edges.push_back(make_edge(e.u + n * f.u, e.v + n * f.v));
      edges.push_back(make_edge(e.u + n * f.v, e.v + n * f.u));
    }
  return Graph(n * h.order(), edges);
}

}  // namespace pairham
